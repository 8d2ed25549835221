#include "gradalg/builders.hpp"
#include "gradalg/commands.hpp"
#include "gradalg/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace gradalg;

namespace {

enum Exit { ok = 0, usage = 1, parse = 2, invariant = 3, cap = 4 };

struct Source {
  std::string input;
  std::string builtin;
  std::string json_out;
};

void add_source(CLI::App* sub, Source& s) {
  auto* in = sub->add_option("--input", s.input, "algebra description (JSON)");
  auto* bi = sub->add_option("--builtin", s.builtin, "builtin algebra name");
  in->excludes(bi);
  sub->add_option("--json-out", s.json_out, "write the JSON report here ('-' for stdout)");
}

Input load(const Source& s) {
  if (!s.input.empty()) return load_file(s.input);
  if (!s.builtin.empty()) return load_builtin(s.builtin);
  throw std::invalid_argument("one of --input or --builtin is required");
}

void write_json(const Json& j, const std::string& path) {
  if (path.empty()) return;
  const std::string text = j.dump(2) + "\n";
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write " + path);
  f << text;
}

int emit(const RunReport& r, const std::string& json_out) {
  if (json_out != "-") std::cout << r.text;
  write_json(r.json, json_out);
  return r.ok ? ok : invariant;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with group-graded associative and Lie algebras"};
  app.require_subcommand(1);

  Source radical_src, decompose_src, codim_src, check_src, verify_src;
  auto* radical = app.add_subcommand("radical", "Jacobson radical, or solvable radical and nilradical");
  add_source(radical, radical_src);
  auto* decompose = app.add_subcommand("decompose", "graded Wedderburn-Artin, Mal'cev or Levi decomposition");
  add_source(decompose, decompose_src);

  auto* codim = app.add_subcommand("codim", "graded and H-codimension sequences");
  add_source(codim, codim_src);
  CodimFlags flags;
  std::string mode = "gr";
  std::uint64_t predicted = 0;
  long r_bound = -1;
  codim->add_option("--n-max", flags.n_max, "largest n")->check(CLI::Range(1, 64));
  codim->add_option("--mode", mode, "gr, h or both")->check(CLI::IsMember({"gr", "h", "both"}));
  auto* pd = codim->add_option("--predicted-d", predicted, "predicted exponent d")->check(CLI::PositiveNumber);
  auto* rb = codim->add_option("--r-bound", r_bound, "polynomial degree R in the bracket (default dim A)");
  codim->add_option("--max-blocks", flags.caps.max_blocks, "cap on m^n blocks");
  codim->add_option("--max-n", flags.caps.max_n, "cap on n");

  auto* check = app.add_subcommand("check-identity", "test a multilinear graded polynomial");
  add_source(check, check_src);
  std::string poly_path;
  check->add_option("--poly", poly_path, "polynomial file (JSON)")->required();

  auto* verify = app.add_subcommand("verify", "check the radical co-stability statements");
  add_source(verify, verify_src);

  auto* builtin_cmd = app.add_subcommand("builtin", "print a builtin algebra description");
  std::string builtin_name, builtin_out;
  bool list = false;
  builtin_cmd->add_option("name", builtin_name, "builtin name");
  builtin_cmd->add_flag("--list", list, "list builtin names");
  builtin_cmd->add_option("--json-out", builtin_out, "also write the description here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*radical) return emit(cmd_radical(load(radical_src)), radical_src.json_out);
    if (*decompose) return emit(cmd_decompose(load(decompose_src)), decompose_src.json_out);
    if (*codim) {
      flags.mode = parse_codim_mode(mode);
      if (pd->count() > 0) flags.predicted_d = predicted;
      if (rb->count() > 0) flags.r_bound = r_bound;
      return emit(cmd_codim(load(codim_src), flags), codim_src.json_out);
    }
    if (*check) return emit(cmd_check_identity(load(check_src), read_file(poly_path)), check_src.json_out);
    if (*verify) return emit(cmd_verify(load(verify_src)), verify_src.json_out);
    if (*builtin_cmd) {
      if (list) {
        for (const auto& n : builtin_names()) std::cout << n << "\n";
        return ok;
      }
      if (builtin_name.empty()) throw std::invalid_argument("builtin name required (or --list)");
      Json j = cmd_builtin(builtin_name);
      std::cout << j.dump(2) << "\n";
      if (builtin_out != "-") write_json(j, builtin_out);
      return ok;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return parse;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return invariant;
  } catch (const ResourceCapExceeded& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return cap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return invariant;
  }
  return usage;
}
