// g6census: one graph6 line per isomorphism class of graphs on n vertices.
// Backs the survey pipeline for n beyond the built-in census (n = 8, 9 take
// seconds to minutes; the connected n = 9 census has 261080 graphs).

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "covreg/enumerate.hpp"

using namespace covreg;

int main(int argc, char** argv) {
    CLI::App app{"graph6 census generator (one representative per isomorphism class)"};
    int n = 0, jobs = 1;
    bool all = false;
    std::string out_path;
    app.add_option("n", n, "vertex count (1..10)")->required()->check(CLI::Range(1, 10));
    app.add_flag("--all", all, "include disconnected graphs");
    app.add_option("--jobs", jobs, "worker threads");
    app.add_option("-o,--out", out_path, "output file (default stdout)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "error: cannot open " << out_path << "\n";
            return 1;
        }
        out = &file;
    }
    std::vector<Graph> graphs = all ? all_graphs(n, jobs) : connected_graphs(n, jobs);
    for (const Graph& g : graphs) *out << to_graph6(g) << "\n";
    std::cerr << graphs.size() << (all ? " graphs" : " connected graphs") << " on " << n
              << " vertices\n";
    return 0;
}
