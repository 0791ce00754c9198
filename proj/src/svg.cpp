#include "pairstab/svg.hpp"

#include <algorithm>
#include <sstream>

namespace pairstab {

namespace {

constexpr long long kUnit = 10;  // pixels per lattice step

struct Box {
    long long min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    void grow(const WeightPolytope& p) {
        for (const Weight& w : p.support()) {
            min_x = std::min(min_x, w.c1);
            max_x = std::max(max_x, w.c1);
            min_y = std::min(min_y, w.c2);
            max_y = std::max(max_y, w.c2);
        }
    }
};

// SVG y grows downward; weights render with c2 up.
long long px(long long c, long long min_c) { return (c - min_c + 2) * kUnit; }
long long py(long long c, long long max_c) { return (max_c - c + 2) * kUnit; }

void render(std::ostringstream& os, const WeightPolytope& p, const Box& b,
            const std::string& cls) {
    if (p.hull().size() >= 2) {
        os << "<path class=\"" << cls << "\" d=\"";
        for (size_t i = 0; i < p.hull().size(); ++i) {
            const Weight& w = p.hull()[i];
            os << (i == 0 ? 'M' : 'L') << px(w.c1, b.min_x) << ' ' << py(w.c2, b.max_y);
        }
        os << "Z\"/>\n";
    }
    for (const Weight& w : p.support())
        os << "<circle class=\"" << cls << "\" cx=\"" << px(w.c1, b.min_x) << "\" cy=\""
           << py(w.c2, b.max_y) << "\" r=\"2\"/>\n";
}

}  // namespace

std::string polytope_svg(const WeightPolytope& outer, const std::optional<WeightPolytope>& inner) {
    Box b;
    b.grow(outer);
    if (inner) b.grow(*inner);
    long long width = (b.max_x - b.min_x + 4) * kUnit;
    long long height = (b.max_y - b.min_y + 4) * kUnit;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<style>.outer{fill:none;stroke:#1f4e79;stroke-width:1.5}"
          ".inner{fill:none;stroke:#b22222;stroke-width:1.5}"
          "circle.outer{fill:#1f4e79;stroke:none}circle.inner{fill:#b22222;stroke:none}"
          "</style>\n";
    render(os, outer, b, "outer");
    if (inner) render(os, *inner, b, "inner");
    os << "</svg>\n";
    return os.str();
}

}  // namespace pairstab
