#include "fml/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace fml {

namespace {

// Splits content into (line number, tokenized line), skipping blank lines
// and lines whose first token starts with '#'.
std::vector<std::pair<int, std::vector<std::string>>> tokenize(const std::string& content) {
    std::vector<std::pair<int, std::vector<std::string>>> lines;
    std::istringstream in(content);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        lines.emplace_back(line_no, std::move(tokens));
    }
    return lines;
}

long long parse_int(const std::string& tok, int line_no) {
    size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + tok + "'", line_no);
    }
    if (pos != tok.size()) throw ParseError("expected an integer, got '" + tok + "'", line_no);
    return value;
}

std::string format_weight(double w) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", w);
    return buf;
}

}  // namespace

std::string write_graph(const ColoredGraph& graph) {
    std::ostringstream out;
    out << graph.num_nodes() << ' ' << graph.num_edges() << '\n';
    for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
    for (NodeId u = 0; u < graph.num_nodes(); ++u) {
        if (graph.color(u) == Color::Blue) out << u << " B\n";
        if (graph.color(u) == Color::Red) out << u << " R\n";
    }
    out << "terminals";
    for (NodeId t : graph.terminals()) out << ' ' << t;
    out << '\n';
    return out.str();
}

ColoredGraph read_graph(const std::string& content) {
    const auto lines = tokenize(content);
    if (lines.empty()) throw ParseError("empty graph file");
    size_t cursor = 0;

    const auto& [header_line, header] = lines[cursor++];
    if (header.size() != 2) throw ParseError("header must be 'n m'", header_line);
    const long long n = parse_int(header[0], header_line);
    const long long m = parse_int(header[1], header_line);
    if (n < 0 || m < 0) throw ParseError("negative counts in header", header_line);

    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (long long i = 0; i < m; ++i) {
        if (cursor >= lines.size()) throw ParseError("unexpected end of file: expected edge line");
        const auto& [line_no, tokens] = lines[cursor++];
        if (tokens.size() != 2) throw ParseError("edge line must be 'u v'", line_no);
        const long long u = parse_int(tokens[0], line_no);
        const long long v = parse_int(tokens[1], line_no);
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("edge endpoint out of range", line_no);
        if (u == v) throw ParseError("self-loop", line_no);
        const Edge e(static_cast<NodeId>(u), static_cast<NodeId>(v));
        if (!seen.insert(e).second) throw ParseError("duplicate edge", line_no);
        edges.push_back(e);
    }

    std::vector<Color> colors(static_cast<size_t>(n), Color::None);
    std::vector<NodeId> terminals;
    bool saw_terminals = false;
    while (cursor < lines.size()) {
        const auto& [line_no, tokens] = lines[cursor++];
        if (tokens[0] == "terminals") {
            if (tokens.size() < 2) throw ParseError("terminals line lists no ids", line_no);
            for (size_t i = 1; i < tokens.size(); ++i) {
                const long long t = parse_int(tokens[i], line_no);
                if (t < 0 || t >= n) throw ParseError("terminal out of range", line_no);
                terminals.push_back(static_cast<NodeId>(t));
            }
            saw_terminals = true;
            if (cursor != lines.size())
                throw ParseError("content after terminals line", lines[cursor].first);
            break;
        }
        if (tokens.size() != 2) throw ParseError("color line must be 'id color'", line_no);
        const long long id = parse_int(tokens[0], line_no);
        if (id < 0 || id >= n) throw ParseError("color on nonexistent node id", line_no);
        if (colors[static_cast<size_t>(id)] != Color::None)
            throw ParseError("node colored twice", line_no);
        if (tokens[1] == "B")
            colors[static_cast<size_t>(id)] = Color::Blue;
        else if (tokens[1] == "R")
            colors[static_cast<size_t>(id)] = Color::Red;
        else
            throw ParseError("color must be B or R", line_no);
    }
    if (!saw_terminals) throw ParseError("missing terminals line");

    try {
        return ColoredGraph(static_cast<int>(n), std::move(edges), std::move(colors),
                            std::move(terminals));
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

std::string write_labeling(const TemporalLabeling& labeling) {
    std::ostringstream out;
    for (const auto& [e, times] : labeling.assignments()) {
        if (times.empty()) continue;
        out << e.u << ' ' << e.v;
        for (int t : times) out << ' ' << t;
        out << '\n';
    }
    return out.str();
}

TemporalLabeling read_labeling(const std::string& content) {
    TemporalLabeling labeling;
    for (const auto& [line_no, tokens] : tokenize(content)) {
        if (tokens.size() < 3) throw ParseError("labeling line must be 'u v t1 ...'", line_no);
        const long long u = parse_int(tokens[0], line_no);
        const long long v = parse_int(tokens[1], line_no);
        for (size_t i = 2; i < tokens.size(); ++i) {
            const long long t = parse_int(tokens[i], line_no);
            if (u < 0 || v < 0 || u == v) throw ParseError("malformed edge", line_no);
            if (t < 1) throw ParseError("timestamps must be >= 1", line_no);
            labeling.add(static_cast<NodeId>(u), static_cast<NodeId>(v), static_cast<int>(t));
        }
    }
    return labeling;
}

std::string write_tree(const WeightedTree& tree) {
    std::ostringstream out;
    out << "root " << tree.root << '\n';
    for (NodeId v = 0; v < tree.size(); ++v)
        out << v << ' ' << tree.parent[static_cast<size_t>(v)] << ' '
            << format_weight(tree.weight[static_cast<size_t>(v)]) << '\n';
    return out.str();
}

void save_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open file for writing: " + path);
    out << content;
    if (!out) throw Error("failed to write file: " + path);
}

std::string load_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace fml
