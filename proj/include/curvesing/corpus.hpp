// The bundled verification corpus: classical singularities, the two
// increasing-ratio families at m = 2..5, and two non-quasihomogeneous
// semi-weighted-homogeneous germs. Golden values are classical where the
// literature pins them and engine-computed, oracle-cross-checked numbers
// otherwise.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace curvesing {

struct CorpusItem {
    std::string name;
    std::string poly;
    std::uint64_t mu;
    std::uint64_t tau;
    std::uint64_t m;
    std::uint64_t r;
    std::uint64_t delta;
    bool quasihomogeneous;
};

inline const std::vector<CorpusItem>& bundled_corpus() {
    static const std::vector<CorpusItem> corpus = {
        {"A1", "y^2 - x^2", 1, 1, 2, 2, 1, true},
        {"A2", "y^2 - x^3", 2, 2, 2, 1, 1, true},
        {"A3", "y^2 - x^4", 3, 3, 2, 2, 2, true},
        {"A4", "y^2 - x^5", 4, 4, 2, 1, 2, true},
        {"A5", "y^2 - x^6", 5, 5, 2, 2, 3, true},
        {"A6", "y^2 - x^7", 6, 6, 2, 1, 3, true},
        {"D4", "x^3 - x*y^2", 4, 4, 3, 3, 3, true},
        {"D5", "x^2*y + y^4", 5, 5, 3, 2, 3, true},
        {"E6", "x^3 + y^4", 6, 6, 3, 1, 3, true},
        {"E7", "x^3 + x*y^3", 7, 7, 3, 2, 4, true},
        {"E8", "x^3 + y^5", 8, 8, 3, 1, 4, true},
        {"ordinary-triple-point", "x^3 - y^3", 4, 4, 3, 3, 3, true},
        {"family-a-m2", "x^5 + x^2*y^3 + y^4", 12, 12, 4, 1, 6, true},
        {"family-a-m3", "x^7 + x^3*y^4 + y^6", 30, 27, 6, 1, 15, false},
        {"family-a-m4", "x^9 + x^4*y^5 + y^8", 56, 48, 8, 1, 28, false},
        {"family-a-m5", "x^11 + x^5*y^6 + y^10", 90, 75, 10, 1, 45, false},
        {"family-b-m2", "x^5 + y^5 + x^3*y^3", 16, 15, 5, 5, 10, false},
        {"family-b-m3", "x^7 + y^7 + x^4*y^4", 36, 32, 7, 7, 21, false},
        {"family-b-m4", "x^9 + y^9 + x^5*y^5", 64, 55, 9, 9, 36, false},
        {"family-b-m5", "x^11 + y^11 + x^6*y^6", 100, 84, 11, 11, 55, false},
        // non-quasihomogeneous semi-weighted-homogeneous germs; tau values
        // are engine goldens cross-checked by the jet oracle and the
        // multiplication-kernel pipeline
        {"swh-1", "x^4 + y^5 + x^2*y^3", 12, 11, 4, 1, 6, false},
        {"swh-2", "x^5 + y^6 + x^3*y^4", 20, 19, 5, 1, 10, false},
    };
    return corpus;
}

inline nlohmann::ordered_json corpus_to_json() {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& item : bundled_corpus()) {
        arr.push_back({{"name", item.name},
                       {"poly", item.poly},
                       {"vars", {"x", "y"}},
                       {"expect",
                        {{"mu", item.mu},
                         {"tau", item.tau},
                         {"m", item.m},
                         {"r", item.r},
                         {"delta", item.delta},
                         {"quasihomogeneous", item.quasihomogeneous}}}});
    }
    return arr;
}

}  // namespace curvesing
