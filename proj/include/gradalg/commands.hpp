#pragma once

#include "gradalg/identities.hpp"
#include "gradalg/serialize.hpp"

#include <optional>
#include <string>

namespace gradalg {

struct Input {
  GradedAlgebra algebra;
  std::string source; // "builtin:<name>" or the file path
  std::string digest; // FNV-1a 64 of the canonical algebra JSON
};

Input load_builtin(const std::string& name);
Input load_file(const std::string& path);
std::string read_file(const std::string& path);
std::string fnv1a_hex(std::string_view text);

/// Command result. `ok` is false when a verification verdict failed.
struct RunReport {
  Json json;
  std::string text;
  bool ok = true;
};

struct CodimFlags {
  std::size_t n_max = 4;
  CodimMode mode = CodimMode::gr;
  std::optional<std::uint64_t> predicted_d;
  std::optional<long> r_bound;
  CodimOptions caps;
};

RunReport cmd_radical(const Input& in);
RunReport cmd_decompose(const Input& in);
RunReport cmd_codim(const Input& in, const CodimFlags& flags);
RunReport cmd_check_identity(const Input& in, const std::string& poly_text);
RunReport cmd_verify(const Input& in);
Json cmd_builtin(const std::string& name);

CodimMode parse_codim_mode(const std::string& s);

} // namespace gradalg
