// Regenerates tests/golden: every interval up to size 3 in all three drawing
// styles, plus a few larger intervals. Writes manifest.txt with
// one "file style interval" line per drawing.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>

#include "tamari/blossoming.hpp"
#include "tamari/intervals.hpp"
#include "tamari/render.hpp"

namespace fs = std::filesystem;
using namespace tamari;

namespace {

std::string draw(const std::string& style, const TamariInterval& i) {
    if (style == "meandering") return render_meandering(phi(i)).svg;
    if (style == "smooth") return render_smooth(i).svg;
    return render_blossoming(Phi(i)).svg;
}

}  // namespace

int main(int argc, char** argv) {
    const fs::path dir = argc > 1 ? fs::path(argv[1]) : fs::path("tests/golden");
    fs::create_directories(dir);
    std::ofstream manifest(dir / "manifest.txt");

    auto write = [&](const std::string& name, const std::string& style, const TamariInterval& i) {
        const std::string file = name + "_" + style + ".svg";
        std::ofstream(dir / file) << draw(style, i);
        manifest << file << " " << style << " " << i.to_string() << "\n";
    };

    for (int n = 1; n <= 3; ++n) {
        int idx = 0;
        for (const auto& i : enumerate_intervals(n)) {
            const std::string name = "n" + std::to_string(n) + "_" + std::to_string(idx++);
            for (const char* style : {"meandering", "smooth", "blossoming"}) write(name, style, i);
        }
    }
    const std::pair<int, std::size_t> larger[] = {{4, 0}, {4, 17}, {4, 41}, {4, 67}, {5, 0}, {5, 123}, {5, 398}};
    for (const auto& [n, idx] : larger) {
        const auto i = enumerate_intervals(n).at(idx);
        const std::string name = "n" + std::to_string(n) + "_" + std::to_string(idx);
        for (const char* style : {"meandering", "smooth", "blossoming"}) write(name, style, i);
    }
    std::cout << "wrote goldens to " << dir << "\n";
}
