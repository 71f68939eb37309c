#include "treedeck/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace treedeck {

namespace {

// Next line that is neither blank nor a comment.
std::optional<std::string> next_data_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.find_first_not_of(" \t") == std::string::npos) continue;
        if (line[0] == '#') continue;
        return line;
    }
    return std::nullopt;
}

std::vector<long> parse_ints(const std::string& line) {
    std::istringstream iss(line);
    std::vector<long> out;
    long x;
    while (iss >> x) out.push_back(x);
    if (!iss.eof()) throw std::invalid_argument("bad token in line: " + line);
    return out;
}

EdgeList read_edges(std::istream& in, int n, int m) {
    EdgeList edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        auto line = next_data_line(in);
        if (!line) throw std::invalid_argument("unexpected end of input in edge list");
        auto f = parse_ints(*line);
        if (f.size() != 2) throw std::invalid_argument("edge line needs two fields: " + *line);
        long a = f[0], b = f[1];
        if (!(0 <= a && a < b && b < n))
            throw std::invalid_argument("edge must satisfy 0 <= a < b < n: " + *line);
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    return edges;
}

}  // namespace

Tree read_tree(std::istream& in) {
    auto header = next_data_line(in);
    if (!header) throw std::invalid_argument("empty input, expected tree");
    auto f = parse_ints(*header);
    if (f.size() != 1) throw std::invalid_argument("tree header must be a single count");
    int n = static_cast<int>(f[0]);
    if (n < 1) throw std::invalid_argument("tree needs n >= 1");
    return Tree(n, read_edges(in, n, n - 1));
}

Forest read_forest(std::istream& in) {
    auto header = next_data_line(in);
    if (!header) throw std::invalid_argument("empty input, expected forest");
    auto f = parse_ints(*header);
    if (f.size() != 2) throw std::invalid_argument("forest header must be `n m`");
    int n = static_cast<int>(f[0]);
    int m = static_cast<int>(f[1]);
    if (n < 0 || m < 0) throw std::invalid_argument("forest header counts must be nonnegative");
    return Forest(n, read_edges(in, n, m));
}

Forest read_graph_auto(std::istream& in) {
    auto header = next_data_line(in);
    if (!header) throw std::invalid_argument("empty input");
    auto f = parse_ints(*header);
    if (f.size() == 1) {
        int n = static_cast<int>(f[0]);
        if (n < 1) throw std::invalid_argument("tree needs n >= 1");
        Tree t(n, read_edges(in, n, n - 1));
        return t;
    }
    if (f.size() == 2) {
        int n = static_cast<int>(f[0]);
        int m = static_cast<int>(f[1]);
        if (n < 0 || m < 0) throw std::invalid_argument("forest header counts must be nonnegative");
        return Forest(n, read_edges(in, n, m));
    }
    throw std::invalid_argument("header must have one (tree) or two (forest) fields");
}

std::optional<Tree> read_next_tree(std::istream& in) {
    auto header = next_data_line(in);
    if (!header) return std::nullopt;
    auto f = parse_ints(*header);
    if (f.size() != 1) throw std::invalid_argument("tree header must be a single count");
    int n = static_cast<int>(f[0]);
    if (n < 1) throw std::invalid_argument("tree needs n >= 1");
    return Tree(n, read_edges(in, n, n - 1));
}

void write_tree(std::ostream& out, const Tree& t) {
    out << t.n() << "\n";
    for (const auto& [a, b] : t.edges()) out << a << " " << b << "\n";
}

void write_forest(std::ostream& out, const Forest& f) {
    out << f.n() << " " << f.edges().size() << "\n";
    for (const auto& [a, b] : f.edges()) out << a << " " << b << "\n";
}

Tree read_tree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_tree(in);
}

Forest read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_graph_auto(in);
}

}  // namespace treedeck
