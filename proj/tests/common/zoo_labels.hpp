#pragma once

#include <vector>

#include "a4diff/labels.hpp"

namespace a4diff::testing {

// Zoo labels of dimension <= maxdim. H bands use the given lambdas (besides the strings
// lambda = 0, inf), G bands the given mus.
inline std::vector<Label> zoo_labels(Side side, int maxdim, const std::vector<Elem>& params) {
    std::vector<Label> out;
    if (side == Side::H) {
        out.push_back(Label::k());
        for (int n = 1; 2 * n + 1 <= maxdim; ++n)
            for (int x = 1; x <= 2; ++x) out.push_back(Label::h_odd(n, x));
        for (int n = 1; 2 * n <= maxdim; ++n) {
            out.push_back(Label::h_even(n, Proj::at(0)));
            out.push_back(Label::h_even(n, Proj::infinity()));
            for (Elem l : params) out.push_back(Label::h_even(n, Proj::at(l)));
        }
        return out;
    }
    for (int i = 0; i < 3; ++i) {
        out.push_back(Label::g_simple(i));
        for (int n = 1; 2 * n + 1 <= maxdim; ++n)
            for (int x = 1; x <= 2; ++x) out.push_back(Label::g_odd(n, x, i));
        for (int n = 1; 2 * n <= maxdim; ++n) {
            out.push_back(Label::g_even(n, Proj::at(0), i));
            out.push_back(Label::g_even(n, Proj::infinity(), i));
        }
    }
    for (int n = 1; 6 * n <= maxdim; ++n)
        for (Elem mu : params) out.push_back(Label::g_band(n, mu));
    return out;
}

}  // namespace a4diff::testing
