// BCH terms through degree 4, then the product rule of U(h) on the
// Heisenberg algebra h = span(x, y, z), z = [x,y].

#include <dynmag.hpp>

#include <iostream>

int main() {
    using namespace dynmag;

    const auto series = bch_series(4);
    for (std::size_t n = 0; n < series.size(); ++n)
        std::cout << "BCH_" << n + 1 << " = " << render(series[n], Style::text, {"X", "Y"}) << "\n";

    PbwEngine heisenberg(NilpotentAlgebra::free_nilpotent(2, 2));
    const char* names[] = {"x", "y", "z"};
    auto name = [&](const int& i) { return std::string(names[i]); };

    const auto x = EnvelopingElement::monomial({0});
    const auto y = EnvelopingElement::monomial({1});
    std::cout << "x . y = " << render<int>(heisenberg.multiply(x, y), Style::text, name) << "\n";
    std::cout << "y . x = " << render<int>(heisenberg.multiply(y, x), Style::text, name) << "\n";

    const auto xy = heisenberg.multiply(x, y);
    std::cout << "(x . y) . (x . y) = " << render<int>(heisenberg.multiply(xy, xy), Style::text, name) << "\n";
}
