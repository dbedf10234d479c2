#include "subcubic/graph6.hpp"

#include <istream>
#include <vector>

#include "subcubic/errors.hpp"

namespace subcubic {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;
constexpr int kMaxByte = 126;

std::string_view strip(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
        line.remove_suffix(1);
    }
    return line;
}

int value_at(std::string_view s, std::size_t pos, std::size_t base) {
    if (pos >= s.size()) {
        throw MalformedGraph6(base + pos, "unexpected end of line");
    }
    const int c = static_cast<unsigned char>(s[pos]);
    if (c < kBias || c > kMaxByte) {
        throw MalformedGraph6(base + pos, "byte " + std::to_string(c) + " outside 63..126");
    }
    return c - kBias;
}

void append_size(std::string& out, std::uint64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
        return;
    }
    int groups = 3;
    if (n <= 258047) {
        out.push_back('~');
    } else {
        out += "~~";
        groups = 6;
    }
    for (int i = groups - 1; i >= 0; --i) {
        out.push_back(static_cast<char>(((n >> (6 * i)) & 0x3F) + kBias));
    }
}

}  // namespace

Graph parse_graph6(std::string_view raw) {
    std::string_view line = strip(raw);
    std::size_t base = 0;
    if (line.starts_with(kHeader)) {
        line.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    if (line.empty()) {
        throw MalformedGraph6(base, "empty graph6 string");
    }
    if (line[0] == ':' || line[0] == ';' || line[0] == '&') {
        throw MalformedGraph6(base, "sparse6/digraph6 input is not supported");
    }

    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (line[0] != '~') {
        n = static_cast<std::uint64_t>(value_at(line, 0, base));
        pos = 1;
    } else {
        int groups = 3;
        pos = 1;
        if (line.size() > 1 && line[1] == '~') {
            groups = 6;
            pos = 2;
        }
        for (int i = 0; i < groups; ++i, ++pos) {
            n = (n << 6) | static_cast<std::uint64_t>(value_at(line, pos, base));
        }
    }
    if (n > (1u << 20)) {
        throw MalformedGraph6(base, "vertex count " + std::to_string(n) + " too large");
    }

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - pos < body) {
        throw MalformedGraph6(base + line.size(), "truncated: expected " + std::to_string(body) + " adjacency bytes");
    }
    if (line.size() - pos > body) {
        throw MalformedGraph6(base + pos + body, "trailing bytes after adjacency data");
    }

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const std::size_t at = pos + static_cast<std::size_t>(k / 6);
            const int chunk = value_at(line, at, base);
            if ((chunk >> (5 - k % 6)) & 1) {
                edges.emplace_back(i, j);
            }
        }
    }
    if (k % 6 != 0) {
        const int last = value_at(line, pos + body - 1, base);
        if ((last & ((1 << (6 - k % 6)) - 1)) != 0) {
            throw MalformedGraph6(base + pos + body - 1, "nonzero padding bits");
        }
    }
    return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
    const auto n = static_cast<std::uint64_t>(g.order());
    std::string out;
    append_size(out, n);
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < g.order(); ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    }
    return out;
}

std::optional<Graph6Record> Graph6Reader::next() {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_number_;
        const std::string_view body = strip(line);
        if (body.empty() || body == kHeader) {
            continue;
        }
        Graph6Record rec;
        rec.line_number = line_number_;
        rec.text = std::string(body);
        try {
            rec.graph = parse_graph6(body);
        } catch (const MalformedGraph6& e) {
            rec.error = e.what();
        } catch (const InvalidGraph& e) {
            rec.error = e.what();
        }
        return rec;
    }
    return std::nullopt;
}

}  // namespace subcubic
