#pragma once

#include <array>
#include <vector>

namespace cvsheet {

// Composite Gauss-Legendre quadrature, 8 nodes per panel.
namespace gauss {

inline constexpr std::array<double, 4> kNodes = {
    0.1834346424956498, 0.5255324099163290, 0.7966664774136267, 0.9602898564975363};
inline constexpr std::array<double, 4> kWeights = {
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

inline Rule composite(double a, double b, int panels) {
    Rule rule;
    rule.nodes.reserve(8 * panels);
    rule.weights.reserve(8 * panels);
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        for (int i = 0; i < 4; ++i) {
            rule.nodes.push_back(mid - 0.5 * h * kNodes[i]);
            rule.weights.push_back(0.5 * h * kWeights[i]);
            rule.nodes.push_back(mid + 0.5 * h * kNodes[i]);
            rule.weights.push_back(0.5 * h * kWeights[i]);
        }
    }
    return rule;
}

template <typename F>
auto integrate(const F& f, double a, double b, int panels) -> decltype(f(a)) {
    const Rule rule = composite(a, b, panels);
    decltype(f(a)) acc{};
    for (size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(rule.nodes[i]);
    return acc;
}

}  // namespace gauss
}  // namespace cvsheet
