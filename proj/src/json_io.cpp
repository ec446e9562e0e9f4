#include "polyrec/json_io.hpp"

namespace polyrec {

json coeffs_to_json(const std::vector<Int>& coeffs) {
    json arr = json::array();
    for (const auto& c : coeffs) arr.push_back(c.get_str());
    return arr;
}

std::vector<Int> coeffs_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("coefficient list must be a JSON array");
    std::vector<Int> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (v.is_string())
            out.emplace_back(v.get<std::string>());
        else if (v.is_number_integer())
            out.emplace_back((long)v.get<long long>());
        else
            throw std::invalid_argument("coefficients must be decimal strings or integers");
    }
    return out;
}

json deck_to_json(const Deck& d) {
    json j;
    j["n"] = d.n;
    json cards = json::array();
    for (const auto& c : d.cards) cards.push_back(coeffs_to_json(c));
    j["cards"] = std::move(cards);
    if (d.generalized()) {
        json co = json::array();
        for (const auto& c : d.co_cards) co.push_back(coeffs_to_json(c));
        j["co_cards"] = std::move(co);
        if (d.co_len < d.n) j["co_truncation"] = d.co_len;
    }
    return j;
}

Deck deck_from_json(const json& j) {
    Deck d;
    d.n = j.at("n").get<int>();
    if (d.n < 2 || d.n > kMaxVertices) throw std::invalid_argument("deck order out of range");
    for (const auto& c : j.at("cards")) d.cards.push_back(coeffs_from_json(c));
    if ((int)d.cards.size() != d.n) throw std::invalid_argument("deck must hold exactly n cards");
    d.card_len = (int)d.cards.front().size();
    for (const auto& c : d.cards)
        if ((int)c.size() != d.card_len) throw std::invalid_argument("cards have inconsistent lengths");
    if (d.card_len < 1 || d.card_len > d.n) throw std::invalid_argument("card length out of range");
    if (j.contains("co_cards")) {
        for (const auto& c : j.at("co_cards")) d.co_cards.push_back(coeffs_from_json(c));
        if ((int)d.co_cards.size() != d.n) throw std::invalid_argument("co-card count must equal n");
        d.co_len = (int)d.co_cards.front().size();
        for (const auto& c : d.co_cards)
            if ((int)c.size() != d.co_len) throw std::invalid_argument("co-cards have inconsistent lengths");
        if (j.contains("co_truncation") && j.at("co_truncation").get<int>() != d.co_len)
            throw std::invalid_argument("co_truncation does not match co-card lengths");
    }
    return d;
}

json outcome_to_json(const ReconstructionOutcome& out) {
    json j;
    switch (out.status) {
        case RecStatus::Success:
            j["status"] = "success";
            j["phi"] = coeffs_to_json(out.phi.coeffs);
            j["phi_complement"] = coeffs_to_json(out.phibar.coeffs);
            break;
        case RecStatus::RankTooLow:
            j["status"] = "rank_too_low";
            j["threshold"] = out.threshold;
            break;
        case RecStatus::NotApplicable:
            j["status"] = "not_applicable";
            j["reason"] = out.reason;
            break;
    }
    return j;
}

json sweep_report_to_json(const SweepReport& report) {
    json j;
    j["n_max"] = report.n_max;
    j["jobs"] = report.jobs;
    j["pass"] = report.pass();
    json checks = json::array();
    for (const auto& run : report.checks) {
        json c;
        c["name"] = run.name;
        c["graphs"] = run.graphs;
        c["millis"] = run.millis;
        json fails = json::array();
        for (const auto& f : run.failures)
            fails.push_back({{"n", f.n}, {"graph6", f.graph6}, {"check", f.check}, {"detail", f.detail}});
        c["failures"] = std::move(fails);
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    return j;
}

json collision_report_to_json(const CollisionReport& report) {
    json j;
    j["n"] = report.n;
    j["groups"] = report.groups;
    j["cospectral_same_deck_pairs"] = report.cospectral_same_deck_pairs;
    j["violations"] = report.violations;
    j["all_cospectral"] = report.violations.empty();
    return j;
}

}  // namespace polyrec
