#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fqs/field.hpp"

namespace fqs {

inline constexpr const char* kArtifactVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

/// Parsed form of the vector text format: header `q=<q> n=<n>` followed by
/// one vector per line as comma-separated decimal residues.
struct VectorFile {
    FieldSpec spec;
    std::size_t n;
    std::vector<FVec> vectors;
};

/// Canonical rendering: header, then each vector line, each terminated by '\n'.
std::string format_vector_file(const FieldSpec& spec, std::size_t n,
                               const std::vector<FVec>& vectors);
/// One vector as comma-separated residues (no newline).
std::string format_vector_line(const FVec& v);

/// Parse; throws std::invalid_argument with a line reference on malformed input.
VectorFile parse_vector_file(std::string_view text);

/// 64-bit FNV-1a over a byte string, rendered as 16 lowercase hex digits.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

} // namespace fqs
