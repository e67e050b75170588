#include "fqs/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fqs {

std::string format_vector_line(const FVec& v) {
    std::string out;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(v[i]);
    }
    return out;
}

std::string format_vector_file(const FieldSpec& spec, std::size_t n,
                               const std::vector<FVec>& vectors) {
    std::string out = "q=" + std::to_string(spec.q()) + " n=" + std::to_string(n) + "\n";
    for (const FVec& v : vectors) {
        if (v.dim() != n) throw std::invalid_argument("vector length differs from header n");
        if (v.spec() != spec) throw std::invalid_argument("vector field differs from header q");
        out += format_vector_line(v);
        out.push_back('\n');
    }
    return out;
}

namespace {

std::uint64_t parse_u64(std::string_view tok, const char* what, std::size_t lineno) {
    std::uint64_t val = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), val);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad " + what + " '" +
                                    std::string(tok) + "'");
    return val;
}

} // namespace

VectorFile parse_vector_file(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw std::invalid_argument("empty vector file");

    std::string_view header = lines[0];
    if (header.substr(0, 2) != "q=")
        throw std::invalid_argument("line 1: header must start with 'q=', got '" +
                                    std::string(header) + "'");
    std::size_t sp = header.find(' ');
    if (sp == std::string_view::npos || header.substr(sp + 1, 2) != "n=")
        throw std::invalid_argument("line 1: header must be 'q=<q> n=<n>'");
    std::uint64_t q = parse_u64(header.substr(2, sp - 2), "modulus", 1);
    std::uint64_t n = parse_u64(header.substr(sp + 3), "dimension", 1);
    if (q > 0x7fffffffULL) throw std::invalid_argument("modulus out of range");
    if (n == 0) throw std::invalid_argument("dimension must be >= 1");
    FieldSpec spec(static_cast<Residue>(q));

    VectorFile out{spec, static_cast<std::size_t>(n), {}};
    for (std::size_t li = 1; li < lines.size(); ++li) {
        std::string_view line = lines[li];
        std::vector<Residue> entries;
        entries.reserve(out.n);
        std::size_t start = 0;
        while (true) {
            std::size_t comma = line.find(',', start);
            std::string_view tok = (comma == std::string_view::npos)
                                       ? line.substr(start)
                                       : line.substr(start, comma - start);
            std::uint64_t e = parse_u64(tok, "residue", li + 1);
            if (e >= q)
                throw std::invalid_argument("line " + std::to_string(li + 1) + ": residue " +
                                            std::to_string(e) + " not reduced mod " +
                                            std::to_string(q));
            entries.push_back(static_cast<Residue>(e));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (entries.size() != out.n)
            throw std::invalid_argument("line " + std::to_string(li + 1) + ": expected " +
                                        std::to_string(out.n) + " entries, got " +
                                        std::to_string(entries.size()));
        out.vectors.emplace_back(spec, std::move(entries));
    }
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(bytes);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::invalid_argument("write failed: " + path);
}

} // namespace fqs
