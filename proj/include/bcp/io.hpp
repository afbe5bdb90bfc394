#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"
#include "subcube.hpp"

namespace bcp {

// Malformed text input. `line` is the 1-based line number of the offence.
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline bool parse_int(const std::string& s, int& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

inline int require_int(const std::string& s, int line, const char* what) {
    int v;
    if (!parse_int(s, v)) throw parse_error(line, std::string("expected integer for ") + what);
    return v;
}

// Comma-separated strictly ascending positive integers, e.g. "1,4,7".
inline std::vector<int> parse_id_list(const std::string& s, int line) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        int v;
        if (!parse_int(tok, v) || v < 1) throw parse_error(line, "expected vertex id, got '" + tok + "'");
        if (!out.empty() && v <= out.back()) throw parse_error(line, "vertex ids must be strictly ascending");
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

// Lines after the advertised payload must be whitespace only.
inline void require_trailing_blank(std::istream& in, int line) {
    std::string s;
    while (std::getline(in, s)) {
        ++line;
        if (!blank(s)) throw parse_error(line, "unexpected extra content");
    }
}

inline std::string get_line(std::istream& in, int line, const char* what) {
    std::string s;
    if (!std::getline(in, s)) throw parse_error(line, std::string("unexpected end of file, expected ") + what);
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

}  // namespace detail

// Graph file:
//   p graph <n> <m>
//   e <u> <v>          (m lines, 1 <= u < v <= n, ascending lexicographic)
inline Graph read_graph(std::istream& in) {
    int line = 1;
    auto head = detail::split_ws(detail::get_line(in, line, "graph header"));
    if (head.size() != 4 || head[0] != "p" || head[1] != "graph")
        throw parse_error(line, "expected header 'p graph <n> <m>'");
    int n = detail::require_int(head[2], line, "vertex count");
    int m = detail::require_int(head[3], line, "edge count");
    if (n < 0 || m < 0) throw parse_error(line, "counts must be nonnegative");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        ++line;
        auto tok = detail::split_ws(detail::get_line(in, line, "edge line"));
        if (tok.size() != 3 || tok[0] != "e") throw parse_error(line, "expected edge line 'e <u> <v>'");
        int u = detail::require_int(tok[1], line, "edge endpoint");
        int v = detail::require_int(tok[2], line, "edge endpoint");
        if (u < 1 || v > n || u >= v) throw parse_error(line, "edge endpoints must satisfy 1 <= u < v <= n");
        if (!edges.empty() && Edge{u, v} <= edges.back())
            throw parse_error(line, "edges must be in ascending order without duplicates");
        edges.emplace_back(u, v);
    }
    detail::require_trailing_blank(in, line);
    return Graph{n, std::move(edges)};
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << "p graph " << g.n << ' ' << g.edges.size() << '\n';
    for (auto [u, v] : g.edges) out << "e " << u << ' ' << v << '\n';
}

// Certificate file:
//   c <cover|partition> <k>
//   B <u1>,<u2>,... : <v1>,<v2>,...    (k lines, each side ascending)
inline BicliqueCertificate read_certificate(std::istream& in) {
    int line = 1;
    auto head = detail::split_ws(detail::get_line(in, line, "certificate header"));
    if (head.size() != 3 || head[0] != "c" || (head[1] != "cover" && head[1] != "partition"))
        throw parse_error(line, "expected header 'c <cover|partition> <k>'");
    BicliqueCertificate cert;
    cert.mode = head[1] == "cover" ? CertMode::cover : CertMode::partition;
    int k = detail::require_int(head[2], line, "biclique count");
    if (k < 0) throw parse_error(line, "biclique count must be nonnegative");
    for (int i = 0; i < k; ++i) {
        ++line;
        auto tok = detail::split_ws(detail::get_line(in, line, "biclique line"));
        if (tok.size() != 4 || tok[0] != "B" || tok[2] != ":")
            throw parse_error(line, "expected biclique line 'B <u1>,... : <v1>,...'");
        auto a = detail::parse_id_list(tok[1], line);
        auto b = detail::parse_id_list(tok[3], line);
        try {
            cert.bicliques.push_back(Biclique::make(std::move(a), std::move(b)));
        } catch (const precondition_error& e) {
            throw parse_error(line, e.what());
        }
    }
    detail::require_trailing_blank(in, line);
    return cert;
}

inline void write_certificate(std::ostream& out, const BicliqueCertificate& cert) {
    out << "c " << to_string(cert.mode) << ' ' << cert.bicliques.size() << '\n';
    for (const auto& b : cert.bicliques) {
        out << "B ";
        for (std::size_t i = 0; i < b.class0.size(); ++i) out << (i ? "," : "") << b.class0[i];
        out << " : ";
        for (std::size_t i = 0; i < b.class1.size(); ++i) out << (i ? "," : "") << b.class1[i];
        out << '\n';
    }
}

// Subcube family file:
//   s <n> <d>
//   <word over 0/1/*>   (n lines of length d; empty lines when d = 0)
inline SubcubeFamily read_family(std::istream& in) {
    int line = 1;
    auto head = detail::split_ws(detail::get_line(in, line, "family header"));
    if (head.size() != 3 || head[0] != "s")
        throw parse_error(line, "expected header 's <n> <d>'");
    int n = detail::require_int(head[1], line, "word count");
    int d = detail::require_int(head[2], line, "dimension");
    if (n < 0 || d < 0) throw parse_error(line, "counts must be nonnegative");
    SubcubeFamily f;
    f.d = d;
    for (int i = 0; i < n; ++i) {
        ++line;
        std::string w = detail::get_line(in, line, "subcube word");
        if (static_cast<int>(w.size()) != d)
            throw parse_error(line, "word length " + std::to_string(w.size()) + " does not match dimension " + std::to_string(d));
        for (char c : w)
            if (c != '0' && c != '1' && c != '*')
                throw parse_error(line, std::string("invalid character '") + c + "' in subcube word");
        f.words.push_back(std::move(w));
    }
    detail::require_trailing_blank(in, line);
    return f;
}

inline void write_family(std::ostream& out, const SubcubeFamily& f) {
    out << "s " << f.words.size() << ' ' << f.d << '\n';
    for (const auto& w : f.words) out << w << '\n';
}

// Convenience file wrappers. Failure to open is reported as a parse error on
// line 0 so the CLI can present one uniform "bad input" exit path.
namespace detail {
inline std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(0, "cannot open file: " + path);
    return in;
}
inline std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error(0, "cannot open file for writing: " + path);
    return out;
}
}  // namespace detail

inline Graph read_graph_file(const std::string& path) {
    auto in = detail::open_in(path);
    return read_graph(in);
}
inline BicliqueCertificate read_certificate_file(const std::string& path) {
    auto in = detail::open_in(path);
    return read_certificate(in);
}
inline SubcubeFamily read_family_file(const std::string& path) {
    auto in = detail::open_in(path);
    return read_family(in);
}
inline void write_graph_file(const std::string& path, const Graph& g) {
    auto out = detail::open_out(path);
    write_graph(out, g);
}
inline void write_certificate_file(const std::string& path, const BicliqueCertificate& cert) {
    auto out = detail::open_out(path);
    write_certificate(out, cert);
}
inline void write_family_file(const std::string& path, const SubcubeFamily& f) {
    auto out = detail::open_out(path);
    write_family(out, f);
}

}  // namespace bcp
