// Command-line surface.  run() is the whole tool: it parses its own flags,
// reads and writes the text formats, and maps every outcome onto the exit
// contract 0 = success/true, 1 = checked false, 2 = usage/parse/IO error,
// 3 = undecidable.  Results go to `out`, diagnostics to `err`.
#pragma once

#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pax/algebra.hpp"
#include "pax/coflag.hpp"
#include "pax/crossed.hpp"
#include "pax/equivalence.hpp"
#include "pax/errors.hpp"
#include "pax/field.hpp"
#include "pax/io.hpp"
#include "pax/linalg.hpp"
#include "pax/metabelian.hpp"

namespace pax::cli {

namespace detail {

struct UsageError : Error {
  using Error::Error;
};

inline constexpr const char* kUsage =
    "usage: pax <command> [arguments]\n"
    "commands:\n"
    "  verify <algebra-file>\n"
    "  check-system <system-file>\n"
    "  product <system-file> -o <algebra-file>\n"
    "  equivalent <system-file> <system-file>\n"
    "  extract <algebra-file> --pi <matrix-file> --target <algebra-file>\n"
    "          [--section <matrix-file>] [--phi-out <matrix-file>]\n"
    "  classify coflag <algebra-file> --field F:<p>\n"
    "  classify metabelian --dimP <m> --dimV <n> --field F:<p>\n"
    "  tower <algebra-file> <coflag-file>...\n"
    "exit codes: 0 success/true, 1 checked false, 2 usage or parse error, 3 undecidable";

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Path "-" selects the result stream.
inline void write_file(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream o(path, std::ios::binary);
  if (!o) throw UsageError("cannot write file '" + path + "'");
  o << text;
}

struct Args {
  std::vector<std::string> pos;
  std::map<std::string, std::string> flags;
};

inline Args scan(const std::vector<std::string>& args, std::size_t from,
                 const std::set<std::string>& known) {
  Args a;
  for (std::size_t i = from; i < args.size(); ++i) {
    const std::string& s = args[i];
    if (s.size() >= 2 && s[0] == '-') {
      if (!known.count(s)) throw UsageError("unknown option '" + s + "'");
      if (a.flags.count(s)) throw UsageError("duplicate option '" + s + "'");
      if (i + 1 >= args.size()) throw UsageError("option '" + s + "' needs a value");
      a.flags[s] = args[++i];
    } else {
      a.pos.push_back(s);
    }
  }
  return a;
}

inline const std::string& flag_of(const Args& a, const std::string& name,
                                  const std::string& usage) {
  const auto it = a.flags.find(name);
  if (it == a.flags.end()) throw UsageError(usage);
  return it->second;
}

inline Field parse_field_flag(const std::string& s) {
  if (s == "Q") return Field::rationals();
  if (s.rfind("F:", 0) == 0) {
    const std::string digits = s.substr(2);
    if (!digits.empty() && digits.size() <= 9 &&
        digits.find_first_not_of("0123456789") == std::string::npos) {
      try {
        return Field::prime(std::stol(digits));
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
    }
  }
  throw UsageError("bad field '" + s + "'; expected F:<p> or Q");
}

inline std::size_t parse_count_flag(const std::string& s, const std::string& what) {
  if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError(what + " must be a nonnegative integer, got '" + s + "'");
  return static_cast<std::size_t>(std::stoul(s));
}

inline int report_verdict(std::ostream& out, const AxiomReport& rep, const char* ok,
                          const char* bad) {
  for (const Violation& v : rep.violations) {
    out << "violation " << v.axiom;
    if (!v.at.empty()) {
      out << " at";
      for (const std::size_t i : v.at) out << ' ' << i + 1;
    }
    out << '\n';
  }
  out << (rep.passed ? ok : bad) << '\n';
  return rep.passed ? 0 : 1;
}

inline int cmd_verify(const Args& a, std::ostream& out) {
  if (a.pos.size() != 1) throw UsageError("usage: verify <algebra-file>");
  const PoissonAlgebra p = parse_algebra(read_file(a.pos[0]));
  return report_verdict(out, verify_poisson(p), "ok", "not poisson");
}

inline int cmd_check_system(const Args& a, std::ostream& out) {
  if (a.pos.size() != 1) throw UsageError("usage: check-system <system-file>");
  const PreCrossedDatum d = parse_system(read_file(a.pos[0]));
  return report_verdict(out, check_crossed_system(d), "ok", "not a crossed system");
}

inline int cmd_product(const Args& a, std::ostream& out) {
  const char* usage = "usage: product <system-file> -o <algebra-file>";
  if (a.pos.size() != 1) throw UsageError(usage);
  const PreCrossedDatum d = parse_system(read_file(a.pos[0]));
  write_file(flag_of(a, "-o", usage), emit_algebra(crossed_product(d)), out);
  return 0;
}

inline int cmd_equivalent(const Args& a, std::ostream& out) {
  if (a.pos.size() != 2) throw UsageError("usage: equivalent <system-file> <system-file>");
  const PreCrossedDatum d = parse_system(read_file(a.pos[0]));
  const PreCrossedDatum d2 = parse_system(read_file(a.pos[1]));
  const Decision dec = decide_cohomologous(d, d2);
  if (dec.verdict == Verdict::Cohomologous) {
    out << emit_matrix(*dec.witness);
    return 0;
  }
  if (dec.verdict == Verdict::NotCohomologous) {
    out << "not cohomologous\n";
    return 1;
  }
  out << "undecidable\n";
  return 3;
}

inline int cmd_extract(const Args& a, std::ostream& out) {
  const char* usage =
      "usage: extract <algebra-file> --pi <matrix-file> --target <algebra-file> "
      "[--section <matrix-file>] [--phi-out <matrix-file>]";
  if (a.pos.size() != 1) throw UsageError(usage);
  const PoissonAlgebra e = parse_algebra(read_file(a.pos[0]));
  const PoissonAlgebra p = parse_algebra(read_file(flag_of(a, "--target", usage)));
  const Matrix pi = parse_matrix(read_file(flag_of(a, "--pi", usage)), e.field);
  std::optional<Matrix> section;
  if (a.flags.count("--section"))
    section = parse_matrix(read_file(a.flags.at("--section")), e.field);
  const Extraction ex = extract_crossed_system(e, p, pi, std::move(section));
  out << emit_system(ex.datum);
  if (a.flags.count("--phi-out")) write_file(a.flags.at("--phi-out"), emit_matrix(ex.phi), out);
  return 0;
}

inline int cmd_classify_coflag(const Args& a, std::ostream& out) {
  const char* usage = "usage: classify coflag <algebra-file> --field F:<p>";
  if (a.pos.size() != 1) throw UsageError(usage);
  const Field fld = parse_field_flag(flag_of(a, "--field", usage));
  const PoissonAlgebra p = parse_algebra(read_file(a.pos[0]));
  out << emit_classification(classify_coflag(p, fld), fld);
  return 0;
}

inline int cmd_classify_metabelian(const Args& a, std::ostream& out) {
  const char* usage = "usage: classify metabelian --dimP <m> --dimV <n> --field F:<p>";
  if (!a.pos.empty()) throw UsageError(usage);
  const std::size_t m = parse_count_flag(flag_of(a, "--dimP", usage), "--dimP");
  const std::size_t n = parse_count_flag(flag_of(a, "--dimV", usage), "--dimV");
  const Field fld = parse_field_flag(flag_of(a, "--field", usage));
  out << emit_classification(classify_metabelian(m, n, fld), fld);
  return 0;
}

inline int cmd_tower(const Args& a, std::ostream& out) {
  if (a.pos.size() < 2) throw UsageError("usage: tower <algebra-file> <coflag-file>...");
  const PoissonAlgebra base = parse_algebra(read_file(a.pos[0]));
  std::vector<CoflagDatum> choices;
  for (std::size_t i = 1; i < a.pos.size(); ++i)
    choices.push_back(parse_coflag(read_file(a.pos[i])));
  const std::vector<PoissonAlgebra> chain = tower(base, choices);
  out << emit_algebra(chain.back());
  return 0;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  try {
    if (args.empty()) throw UsageError(kUsage);
    const std::string cmd = args[0];
    if (cmd == "verify") return cmd_verify(scan(args, 1, {}), out);
    if (cmd == "check-system") return cmd_check_system(scan(args, 1, {}), out);
    if (cmd == "product") return cmd_product(scan(args, 1, {"-o"}), out);
    if (cmd == "equivalent") return cmd_equivalent(scan(args, 1, {}), out);
    if (cmd == "extract")
      return cmd_extract(scan(args, 1, {"--pi", "--target", "--section", "--phi-out"}), out);
    if (cmd == "classify") {
      if (args.size() < 2)
        throw UsageError("usage: classify coflag|metabelian <arguments>");
      if (args[1] == "coflag")
        return cmd_classify_coflag(scan(args, 2, {"--field"}), out);
      if (args[1] == "metabelian")
        return cmd_classify_metabelian(scan(args, 2, {"--dimP", "--dimV", "--field"}), out);
      throw UsageError("unknown classify mode '" + args[1] + "'");
    }
    if (cmd == "tower") return cmd_tower(scan(args, 1, {}), out);
    throw UsageError("unknown command '" + cmd + "'\n" + std::string(kUsage));
  } catch (const detail::UsageError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const UndecidableError& e) {
    err << "undecidable: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const NotPoissonError& e) {
    err << "check failed: " << e.what() << '\n';
    return 1;
  } catch (const NotAMorphismError& e) {
    err << "check failed: " << e.what() << '\n';
    return 1;
  } catch (const NotASectionError& e) {
    err << "check failed: " << e.what() << '\n';
    return 1;
  } catch (const NotValidSystemError& e) {
    err << "check failed: " << e.what() << '\n';
    return 1;
  } catch (const InvalidCoflagError& e) {
    err << "check failed: " << e.what() << '\n';
    return 1;
  } catch (const InvalidCMatrixError& e) {
    err << "check failed: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace pax::cli
