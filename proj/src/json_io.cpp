#include "ideallab/json_io.hpp"

#include <set>
#include <stdexcept>

namespace ideallab {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("dfa json: " + what);
}

int as_int(const ordered_json& v, const char* where) {
    if (!v.is_number_integer()) bad(std::string(where) + " must be an integer");
    return v.get<int>();
}

}  // namespace

nlohmann::ordered_json dfa_to_json(const Dfa& dfa) {
    ordered_json doc;
    doc["states"] = dfa.state_count();
    doc["alphabet"] = dfa.alphabet();
    ordered_json transitions = ordered_json::object();
    for (int c = 0; c < dfa.alphabet_size(); ++c)
        transitions[dfa.alphabet()[static_cast<std::size_t>(c)]] = dfa.transition(c).images();
    doc["transitions"] = std::move(transitions);
    doc["initial"] = dfa.initial_state();
    doc["finals"] = dfa.final_states();
    return doc;
}

Dfa dfa_from_json(const nlohmann::ordered_json& doc) {
    if (!doc.is_object()) bad("document must be an object");
    static const std::set<std::string> known = {"states", "alphabet", "transitions", "initial",
                                               "finals"};
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (!known.count(key)) bad("unknown key \"" + key + "\"");
    }
    for (const auto& key : known)
        if (!doc.contains(key)) bad("missing key \"" + key + "\"");

    const int n = as_int(doc["states"], "\"states\"");
    if (n < 1) bad("\"states\" must be >= 1");

    if (!doc["alphabet"].is_array()) bad("\"alphabet\" must be an array");
    std::vector<std::string> alphabet;
    for (const auto& letter : doc["alphabet"]) {
        if (!letter.is_string()) bad("alphabet entries must be strings");
        alphabet.push_back(letter.get<std::string>());
    }

    if (!doc["transitions"].is_object()) bad("\"transitions\" must be an object");
    if (doc["transitions"].size() != alphabet.size())
        bad("\"transitions\" must have exactly one entry per letter");
    std::vector<Transformation> delta;
    for (const auto& letter : alphabet) {
        if (!doc["transitions"].contains(letter))
            bad("missing transitions for letter \"" + letter + "\"");
        const auto& row = doc["transitions"][letter];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            bad("transitions for \"" + letter + "\" must list one image per state");
        std::vector<int> images;
        for (const auto& img : row) {
            const int q = as_int(img, "transition image");
            if (q < 1 || q > n)
                bad("transition image " + std::to_string(q) + " for \"" + letter +
                    "\" out of range 1.." + std::to_string(n));
            images.push_back(q);
        }
        delta.emplace_back(std::move(images));
    }

    const int initial = as_int(doc["initial"], "\"initial\"");
    if (initial < 1 || initial > n) bad("\"initial\" out of range");

    if (!doc["finals"].is_array()) bad("\"finals\" must be an array");
    std::vector<int> finals;
    for (const auto& f : doc["finals"]) {
        const int q = as_int(f, "final state");
        if (q < 1 || q > n) bad("final state " + std::to_string(q) + " out of range");
        finals.push_back(q);
    }

    try {
        return Dfa(n, std::move(alphabet), std::move(delta), initial, std::move(finals));
    } catch (const std::invalid_argument& e) {
        bad(e.what());
    }
}

std::string dfa_to_json_string(const Dfa& dfa) { return dfa_to_json(dfa).dump(2) + "\n"; }

Dfa dfa_from_json_string(const std::string& text) {
    return dfa_from_json(nlohmann::ordered_json::parse(text));
}

}  // namespace ideallab
