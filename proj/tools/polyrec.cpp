#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "polyrec/json_io.hpp"

using namespace polyrec;

namespace {

int g_exit = 0;
bool g_pretty = false;

void emit(const json& j, const std::string& out_path = "-") {
    std::string text = g_pretty ? j.dump(2) : j.dump();
    text += '\n';
    if (out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
        f << text;
    }
}

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open file: " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Graph load_graph(const std::string& g6, const std::string& edges_path) {
    if (!edges_path.empty()) {
        std::istringstream in(slurp(edges_path));
        return Graph::parse_edge_list(in);
    }
    if (g6.empty()) throw std::invalid_argument("provide a graph6 string or --edges FILE");
    return Graph::parse_graph6(g6);
}

std::vector<Int> reduce_vec(const std::vector<Int>& v, const Int& m) {
    std::vector<Int> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(mod_canon(x, m));
    return out;
}

Deck load_deck(const std::string& path) { return deck_from_json(json::parse(slurp(path))); }

void cmd_charpoly(const std::string& g6, const std::string& edges, long mod) {
    Poly phi = charpoly(load_graph(g6, edges));
    json j;
    j["phi"] = coeffs_to_json(mod >= 2 ? reduce_vec(phi.coeffs, Int(mod)) : phi.coeffs);
    if (mod >= 2) j["mod"] = mod;
    emit(j);
}

void cmd_deck(const std::string& g6, const std::string& edges, bool generalized, int truncate_co,
              long mod, const std::string& out) {
    Graph g = load_graph(g6, edges);
    Deck d = make_deck(g, generalized, truncate_co);
    if (mod >= 2) {
        for (auto& c : d.cards) c = reduce_vec(c, Int(mod));
        for (auto& c : d.co_cards) c = reduce_vec(c, Int(mod));
    }
    json j = deck_to_json(d);
    if (mod >= 2) j["mod"] = mod;
    emit(j, out);
}

void finish_outcome(const ReconstructionOutcome& out) {
    emit(outcome_to_json(out));
    if (out.status != RecStatus::Success) g_exit = 2;
}

void cmd_reconstruct(const std::string& deck_path, int s, int t, bool controllable) {
    Deck d = load_deck(deck_path);
    if (controllable) {
        finish_outcome(reconstruct_controllable(d));
        return;
    }
    if (s > 0 || t > 0) {
        if (t > 0 && t < d.card_len) truncate_deck_cards(d, t);
        if (s > 0 && s < d.co_len) truncate_deck_co(d, s);
        finish_outcome(reconstruct_general(d));
        return;
    }
    finish_outcome(reconstruct_full(d));
}

void cmd_reconstruct_c4free(const std::string& deck_path) {
    finish_outcome(reconstruct_c4free_lowrank(load_deck(deck_path)));
}

void cmd_complement_mod4(const std::string& poly_path, int n) {
    json j = json::parse(slurp(poly_path));
    std::vector<Int> coeffs = coeffs_from_json(j.is_array() ? j : j.at("coeffs"));
    if ((int)coeffs.size() != n + 1)
        throw std::invalid_argument("polynomial of degree n needs n+1 coefficients");
    ModRing r4{Int(4)};
    std::vector<Int> c;
    for (const auto& x : coeffs) c.push_back(r4.canon(x));
    ModPoly phi4{r4, n, std::move(c)};
    ModPoly out = complement_charpoly_mod4(phi4);
    json res;
    res["phi_complement_mod4"] = coeffs_to_json(out.coeffs);
    emit(res);
}

void cmd_deck_mod(const std::string& deck_path) {
    Deck d = load_deck(deck_path);
    ModDeckData data = base_mod_data(d);
    Theorem4Output t4 = theorem4(data);
    Theorem5Output t5 = theorem5(data, t4);
    json j;
    j["bn_mod2"] = t4.bn_mod2;
    j["walk_matrix_mod2"] = t4.walk_matrix_mod2;
    j["phibar_top_mod4"] = coeffs_to_json(t4.phibar_top_mod4);
    j["phibar_const_mod2"] = t4.phibar_const_mod2;
    if (t5.applicable) {
        json t;
        t["phi_const_mod4"] = t5.phi_const_mod4.get_str();
        t["phibar_mod4"] = coeffs_to_json(t5.phibar_mod4.coeffs);
        j["theorem5"] = std::move(t);
    } else {
        j["theorem5"] = "not_applicable";
    }
    emit(j);
}

void cmd_walk_rank(const std::string& g6, const std::string& edges, bool mod2) {
    WalkMatrix w = walk_matrix(load_graph(g6, edges));
    json j;
    j["rank"] = mod2 ? rank_f2(w) : rank_q(w);
    j["field"] = mod2 ? "F2" : "Q";
    emit(j);
}

void cmd_verify(int n_max, const std::string& checks_csv, int jobs) {
    std::vector<std::string> names;
    std::stringstream ss(checks_csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) names.push_back(item);
    SweepReport report = verify_sweep(n_max, names, jobs);
    emit(sweep_report_to_json(report));
    if (!report.pass()) g_exit = 3;
}

void cmd_collisions(int n, int jobs) {
    CollisionReport report = deck_collision_search(n, jobs);
    emit(collision_report_to_json(report));
    if (!report.violations.empty()) g_exit = 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"characteristic-polynomial reconstruction from polynomial decks"};
    app.require_subcommand(1);
    app.add_flag("--pretty", g_pretty, "indent JSON output");

    std::string g6, edges, deck_path, poly_path, out_path = "-", checks = "all";
    long mod = 0;
    int truncate_co = -1, s = 0, t = 0, n = 0, n_max = 6, jobs = 1;
    bool generalized = false, controllable = false, mod2 = false;

    auto* c_charpoly = app.add_subcommand("charpoly", "characteristic polynomial of a graph");
    c_charpoly->add_option("graph6", g6, "graph6 string");
    c_charpoly->add_option("--edges", edges, "edge-list file (\"n m\" header, then \"u v\" lines); - for stdin");
    c_charpoly->add_option("--mod", mod, "reduce coefficients mod M");

    auto* c_deck = app.add_subcommand("deck", "polynomial deck of a graph");
    c_deck->add_option("graph6", g6, "graph6 string");
    c_deck->add_option("--edges", edges, "edge-list file; - for stdin");
    c_deck->add_flag("--generalized", generalized, "include complement cards");
    c_deck->add_option("--truncate-co", truncate_co, "keep only the top S co-card coefficients");
    c_deck->add_option("--mod", mod, "reduce coefficients mod M");
    c_deck->add_option("--out", out_path, "output file; - for stdout");

    auto* c_rec = app.add_subcommand("reconstruct", "pair reconstruction from a generalized deck");
    c_rec->add_option("--deck", deck_path, "deck JSON file; - for stdin")->required();
    c_rec->add_option("--s", s, "co-card truncation to use");
    c_rec->add_option("--t", t, "card truncation to use");
    c_rec->add_flag("--controllable", controllable, "use the 2/3-truncation rank-threshold variant");

    auto* c_c4 = app.add_subcommand("reconstruct-c4free", "plain-deck reconstruction for C4-free low-rank graphs");
    c_c4->add_option("--deck", deck_path, "deck JSON file; - for stdin")->required();

    auto* c_cm4 = app.add_subcommand("complement-mod4", "phi of the complement mod 4 from phi mod 4");
    c_cm4->add_option("--poly", poly_path, "polynomial JSON (coefficient array); - for stdin")->required();
    c_cm4->add_option("--n", n, "nominal degree")->required();

    auto* c_dm = app.add_subcommand("deck-mod", "mod-2/mod-4 data recoverable from a plain deck");
    c_dm->add_option("--deck", deck_path, "deck JSON file; - for stdin")->required();

    auto* c_wr = app.add_subcommand("walk-rank", "rank of the walk matrix");
    c_wr->add_option("graph6", g6, "graph6 string");
    c_wr->add_option("--edges", edges, "edge-list file; - for stdin");
    c_wr->add_flag("--mod2", mod2, "rank over F2 instead of Q");

    auto* c_verify = app.add_subcommand("verify", "exhaustive invariant sweeps over all small graphs");
    c_verify->add_option("--n-max", n_max, "largest graph order to sweep");
    c_verify->add_option("--checks", checks, "comma-separated check names, or 'all'");
    c_verify->add_option("--jobs", jobs, "parallel workers (1 = serial)");

    auto* c_coll = app.add_subcommand("collisions", "search same-deck graph classes");
    c_coll->add_option("--n", n, "graph order")->required();
    c_coll->add_option("--jobs", jobs, "parallel workers");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_charpoly->parsed()) cmd_charpoly(g6, edges, mod);
        if (c_deck->parsed()) cmd_deck(g6, edges, generalized, truncate_co, mod, out_path);
        if (c_rec->parsed()) cmd_reconstruct(deck_path, s, t, controllable);
        if (c_c4->parsed()) cmd_reconstruct_c4free(deck_path);
        if (c_cm4->parsed()) cmd_complement_mod4(poly_path, n);
        if (c_dm->parsed()) cmd_deck_mod(deck_path);
        if (c_wr->parsed()) cmd_walk_rank(g6, edges, mod2);
        if (c_verify->parsed()) cmd_verify(n_max, checks, jobs);
        if (c_coll->parsed()) cmd_collisions(n, jobs);
    } catch (const parse_error& e) {
        emit(json{{"error", e.what()}, {"offset", e.offset}});
        return 1;
    } catch (const std::exception& e) {
        emit(json{{"error", e.what()}});
        return 1;
    }
    return g_exit;
}
