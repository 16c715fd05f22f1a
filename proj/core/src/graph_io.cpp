#include "cbramsey/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "cbramsey/error.hpp"

namespace cbramsey {

namespace {

constexpr int kBias = 63;
constexpr long kMaxShortOrder = 62;
constexpr long kMaxMediumOrder = 258047;

void append_order(std::string& out, long n) {
    if (n <= kMaxShortOrder) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= kMaxMediumOrder) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
}

int sextet(char c) {
    const int v = static_cast<unsigned char>(c) - kBias;
    if (v < 0 || v > 63) throw Error(ErrorKind::ParseError, std::string("invalid graph6 byte '") + c + "'");
    return v;
}

}  // namespace

std::string to_graph6(const Graph& g) {
    std::string out;
    const int n = g.order();
    append_order(out, n);
    int acc = 0, bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
    return out;
}

Graph from_graph6(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) throw Error(ErrorKind::ParseError, "empty graph6 string");

    std::size_t pos = 0;
    long n = 0;
    if (text[0] != '~') {
        n = sextet(text[0]);
        pos = 1;
    } else if (text.size() >= 2 && text[1] == '~') {
        if (text.size() < 8) throw Error(ErrorKind::ParseError, "truncated graph6 order");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(text[i]);
        pos = 8;
    } else {
        if (text.size() < 4) throw Error(ErrorKind::ParseError, "truncated graph6 order");
        for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(text[i]);
        pos = 4;
    }
    if (n > kMaxMediumOrder * 4) throw Error(ErrorKind::ParseError, "graph6 order too large");

    const auto order = static_cast<int>(n);
    const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    const auto expected = static_cast<std::size_t>((pairs + 5) / 6);
    if (text.size() - pos != expected)
        throw Error(ErrorKind::ParseError, "graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                                               std::to_string(expected));

    GraphBuilder b(order);
    long long k = 0;
    for (int j = 1; j < order; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = sextet(text[pos + static_cast<std::size_t>(k / 6)]);
            if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
        }
    }
    if (pairs % 6 != 0) {
        const int last = sextet(text.back());
        if (last & ((1 << (6 - pairs % 6)) - 1)) throw Error(ErrorKind::ParseError, "nonzero graph6 padding");
    }
    return std::move(b).build();
}

nlohmann::ordered_json to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["order"] = g.order();
    auto edges = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    try {
        const int order = j.at("order").get<int>();
        GraphBuilder b(order);
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::ParseError, "edge must be a pair");
            b.add_edge(e[0].get<int>(), e[1].get<int>());
        }
        return std::move(b).build();
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::ParseError, ex.what());
    } catch (const Error& ex) {
        if (ex.kind() == ErrorKind::ParseError) throw;
        throw Error(ErrorKind::ParseError, ex.what());
    }
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    // '{' also opens a graph6 line for 60 vertices; graph6 never contains '"'.
    if (first != std::string::npos && text[first] == '{' && text.find('"') != std::string::npos) {
        nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
        if (j.is_discarded()) throw Error(ErrorKind::ParseError, "malformed JSON graph in " + path);
        return graph_from_json(j);
    }
    return from_graph6(text);
}

}  // namespace cbramsey
