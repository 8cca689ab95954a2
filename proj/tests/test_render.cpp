#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "tamari/render.hpp"

using namespace tamari;

namespace {

int count_matches(const std::string& s, const std::string& pattern) {
    const std::regex re(pattern);
    return static_cast<int>(std::distance(std::sregex_iterator(s.begin(), s.end(), re), std::sregex_iterator()));
}

}  // namespace

TEST(Render, SizeOneHasTwoArcs) {
    const auto f = render_meandering(phi(enumerate_intervals(1)[0]));
    EXPECT_EQ(f.arcs.size(), 2u);
    EXPECT_EQ(count_matches(f.svg, "<path class=\"arc "), 2);
}

TEST(Render, ArcCountsAndSides) {
    for (const auto& i : enumerate_intervals(4)) {
        const auto m = render_meandering(phi(i));
        EXPECT_EQ(static_cast<int>(m.arcs.size()), 2 * i.size());
        EXPECT_EQ(count_matches(m.svg, "class=\"arc upper\""), i.size());
        EXPECT_EQ(count_matches(m.svg, "class=\"arc lower\""), i.size());
        const auto s = render_smooth(i);
        EXPECT_EQ(static_cast<int>(s.arcs.size()), 2 * i.size());
        const auto b = render_blossoming(Phi(i));
        EXPECT_EQ(count_matches(b.svg, "class=\"bud\""), 2 * (i.size() + 1));
    }
}

TEST(Render, ArcsDisjoint) {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& i : enumerate_intervals(n)) {
            EXPECT_TRUE(arcs_disjoint(render_meandering(phi(i))));
            EXPECT_TRUE(arcs_disjoint(render_smooth(i)));
            EXPECT_TRUE(arcs_disjoint(render_blossoming(Phi(i))));
        }
    }
}

TEST(Render, DisjointnessDetectsCrossing) {
    Figure f;
    f.arcs = {{0, 2, true}, {1, 3, true}};
    EXPECT_FALSE(arcs_disjoint(f));
    f.arcs = {{0, 2, true}, {1, 3, false}};
    EXPECT_TRUE(arcs_disjoint(f));
    f.arcs = {{0, 3, true}, {1, 2, true}, {3, 4, true}};
    EXPECT_TRUE(arcs_disjoint(f));
}

TEST(Render, Deterministic) {
    const auto i = TamariInterval::parse("UDUD|UUDD");
    EXPECT_EQ(render_blossoming(Phi(i)).svg, render_blossoming(Phi(i)).svg);
    const auto f = render_smooth(i);
    EXPECT_EQ(f.svg.rfind("<svg", 0), 0u);
    EXPECT_NE(f.svg.find("</svg>"), std::string::npos);
    EXPECT_GT(f.width, 0);
    EXPECT_GT(f.height, 0);
}

TEST(Render, GoldenFiles) {
    const std::filesystem::path dir = TAMARI_GOLDEN_DIR;
    std::ifstream manifest(dir / "manifest.txt");
    ASSERT_TRUE(manifest) << "missing " << dir / "manifest.txt";
    std::string file, style, text;
    int compared = 0;
    while (manifest >> file >> style >> text) {
        std::ifstream in(dir / file);
        std::stringstream golden;
        golden << in.rdbuf();
        const auto i = TamariInterval::parse(text);
        const std::string svg = style == "meandering" ? render_meandering(phi(i)).svg
                                : style == "smooth"   ? render_smooth(i).svg
                                                      : render_blossoming(Phi(i)).svg;
        EXPECT_EQ(svg, golden.str()) << file;
        ++compared;
    }
    EXPECT_EQ(compared, 3 * (1 + 3 + 13 + 7));
}
