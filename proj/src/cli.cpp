#include "hybridqec/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "hybridqec/bacon_casaccino.hpp"
#include "hybridqec/catalog.hpp"
#include "hybridqec/code_file.hpp"
#include "hybridqec/errors.hpp"
#include "hybridqec/kl_oracle.hpp"
#include "hybridqec/params.hpp"

namespace hqec::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
}

struct Loaded {
  std::string label;
  CodeFile file;
};

// A catalog name or a path to a code file.
Loaded load_code(const std::string& source) {
  if (const CatalogEntry* e = find_example(source)) return {e->name, parse_code_file(e->text)};
  return {source, parse_code_file(read_file(source))};
}

// "repN" or a path to a classical code file.
LinearCode load_linear(const std::string& source) {
  if (source.size() > 3 && source.starts_with("rep") &&
      source.find_first_not_of("0123456789", 3) == std::string::npos) {
    return LinearCode::repetition(FieldSpec::builtin(2), std::stoul(source.substr(3)));
  }
  return parse_linear_code(read_file(source));
}

struct Distance {
  long long value = 0;
  bool exact = false;
  std::string text;
};

Distance describe(const char* name, const WeightSearchResult& r, std::size_t n) {
  Distance d;
  if (r.weight) {
    d.value = static_cast<long long>(*r.weight);
    d.exact = true;
    d.text = std::string(name) + " = " + std::to_string(d.value) + " (exact)";
  } else if (r.exhaustive) {
    d.value = static_cast<long long>(n) + 1;
    d.exact = true;
    d.text = std::string(name) + " = " + std::to_string(d.value) + " (no such operator exists)";
  } else {
    d.value = static_cast<long long>(r.searched_to) + 1;
    d.text = std::string(name) + " >= " + std::to_string(d.value) + " (lower bound, searched to weight " +
             std::to_string(r.searched_to) + ")";
  }
  return d;
}

std::string qudit_list(const PauliOperator& e) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i : support(e)) {
    s += (first ? "" : ",") + std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

void print_witness(std::ostream& out, const char* kind, const WeightSearchResult& r) {
  if (!r.witness) return;
  out << "  " << kind << " witness: " << format_pauli(*r.witness) << " (weight " << weight(*r.witness)
      << ", qudits " << qudit_list(*r.witness) << ")\n";
}

void print_bounds(std::ostream& out, const HybridParams& p) {
  out << "singleton: " << to_string(singleton_check(p)) << '\n';
  out << "trivial split: " << to_string(rule_out_trivial_split(p)) << '\n';
}

std::size_t default_max_weight(std::size_t n) { return n <= 12 ? n : 4; }

std::string format_subsystem(const HybridParams& p) {
  return "[[" + std::to_string(p.n) + "," + to_string(p.k) + "," + to_string(p.m) + "," + std::to_string(p.d) +
         "]]_" + std::to_string(p.q);
}

int cmd_verify(const std::string& source, std::optional<std::size_t> max_weight, const std::string& expect,
               std::ostream& out) {
  std::optional<HybridParams> expected;
  if (!expect.empty()) expected = parse_params(expect);

  const Loaded in = load_code(source);
  const HybridCode h = make_hybrid(in.file);
  const std::size_t n = h.n();
  const std::size_t w = max_weight.value_or(default_max_weight(n));

  out << "code: " << in.label;
  if (in.file.kind == CodeFile::Kind::subsystem) out << " (subsystem code, gauge-fixed)";
  out << '\n';
  const auto qd = quantum_distance(h, w);
  const auto cd = classical_distance(h, w);
  const auto id = inner_distance(h, w);
  const Distance d = describe("d", qd, n);
  const Distance inner = describe("inner-code distance", id, n);
  const Distance c = describe("c", cd, n);

  HybridParams p;
  p.n = static_cast<long long>(n);
  p.k = h.k();
  p.m = Rational(static_cast<long long>(h.m()));
  p.d = d.value;
  p.c = c.value;
  p.q = h.spec()->q();

  out << "n = " << p.n << "\nk = " << to_string(p.k) << "\nm = " << to_string(p.m) << '\n';
  out << d.text << '\n';
  print_witness(out, "quantum", qd);
  out << inner.text << '\n';
  if (d.exact && inner.exact && d.value < inner.value) {
    out << "  note: some operators of weight " << d.value
        << " act on the quantum information while changing the classical message\n";
  }
  out << c.text << '\n';
  print_witness(out, "classical", cd);
  out << "parameters: " << format_params(p) << (d.exact && c.exact ? "" : " (distances are lower bounds)") << '\n';
  print_bounds(out, p);

  if (!expected) return kPass;
  if (*expected == p && d.exact && c.exact) {
    out << "expect " << format_params(*expected) << ": match\n";
    return kPass;
  }
  out << "expect " << format_params(*expected) << ": mismatch";
  if (!(d.exact && c.exact)) out << " (not certified; raise --max-weight)";
  out << '\n';
  return kFail;
}

int cmd_bc(const std::string& code1, const std::string& code2, bool hybrid, const std::string& emit,
           std::optional<std::size_t> max_weight, std::ostream& out) {
  const LinearCode c1 = load_linear(code1);
  const LinearCode c2 = load_linear(code2);
  require_same_field(c1.spec(), c2.spec());
  for (const auto* c : {&c1, &c2}) {
    out << (c == &c1 ? "C1" : "C2") << ": [" << c->n() << "," << c->k() << "," << distance_or_infinite(*c)
        << "]_" << c->spec()->q() << ", dual distance " << distance_or_infinite(dual(*c)) << '\n';
  }
  const std::size_t n = c1.n() * c2.n();
  const std::size_t w = max_weight.value_or(n);

  if (!hybrid) {
    const BcPrediction pred = predict_bc(c1, c2);
    const SubsystemCode s = construct_bc(c1, c2);
    const auto dist = min_distance_subsystem(s, w);
    const Distance d = describe("d", dist, n);
    const auto pur = purity(s);
    HybridParams got = pred.params;
    got.k = s.k();
    got.m = s.r();
    got.d = d.value;
    out << "predicted: " << format_subsystem(pred.params) << ", purity " << pred.purity << '\n';
    out << "enumerated: " << format_subsystem(got) << ", " << d.text << ", purity "
        << (pur.weight ? std::to_string(*pur.weight) : std::string("none")) << '\n';
    if (!emit.empty()) write_output(emit, write_code_file(to_code_file(s)), out);
    const bool ok = d.exact && got == pred.params && pur.weight && *pur.weight == pred.purity;
    return ok ? kPass : kFail;
  }

  const BcHybrid bh = construct_bc_hybrid(c1, c2);
  const Distance d = describe("d", quantum_distance(bh.code, w), n);
  const Distance c = describe("c", classical_distance(bh.code, w), n);
  HybridParams got = bh.predicted;
  got.k = bh.code.k();
  got.m = Rational(static_cast<long long>(bh.code.m()));
  got.d = d.value;
  got.c = c.value;
  out << "predicted: " << format_params(bh.predicted) << '\n';
  out << "enumerated: " << format_params(got) << " (" << d.text << ", " << c.text << ")\n";
  print_bounds(out, got);
  if (!emit.empty()) write_output(emit, write_code_file(to_code_file(bh.code)), out);
  return d.exact && c.exact && got == bh.predicted ? kPass : kFail;
}

int cmd_kl(const std::string& source, std::size_t d, std::size_t c, bool correct, bool subsystem,
           std::ostream& out) {
  const Loaded in = load_code(source);
  const HybridCode h = make_hybrid(in.file);
  const std::size_t cap = oracle_cap();
  const KlReport r = correct     ? check_correction(h, d, c, cap)
                     : subsystem ? check_subsystem_conditions(h, d, c, cap)
                                 : check_detection(h, d, c, cap);
  const char* mode = correct ? "correction" : subsystem ? "subsystem detection" : "detection";
  out << "code: " << in.label << '\n';
  out << "check: " << mode << " with d = " << d << ", c = " << c << '\n';
  out << "dimension " << r.dimension << ", inner code dimension " << r.code_dimension << ", messages "
      << r.messages << '\n';
  out << "errors checked: " << r.condition1_errors << " (condition 1), " << r.condition2_errors
      << " (condition 2)\n";
  for (const auto& wmsg : r.warnings) out << "warning: " << wmsg << '\n';
  if (r.passed()) {
    out << "result: PASS\n";
    return kPass;
  }
  out << "result: FAIL, " << r.violations.size() << " violations\n";
  for (int cond : {1, 2}) {
    if (const auto mw = r.min_witness_weight(cond)) {
      out << "  condition " << cond << " minimal witness weight " << *mw << '\n';
    }
  }
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < r.violations.size() && i < kShown; ++i) {
    const auto& v = r.violations[i];
    out << "  condition " << v.condition << ": " << format_pauli(v.error) << " (weight " << weight(v.error)
        << ") a=" << v.a << " b=" << v.b << " residual " << v.residual << '\n';
  }
  if (r.violations.size() > kShown) out << "  ... " << r.violations.size() - kShown << " more\n";
  return kFail;
}

int cmd_bounds(const std::string& text, std::ostream& out) {
  const HybridParams p = parse_params(text);
  out << "parameters: " << format_params(p) << '\n';
  print_bounds(out, p);
  return kPass;
}

int cmd_gauge_fix(const std::string& source, const std::string& fix, const std::string& output,
                  std::ostream& out) {
  const Loaded in = load_code(source);
  if (in.file.kind != CodeFile::Kind::subsystem) throw Error("gauge-fix expects a subsystem code");
  const HybridCode h = gauge_fix(make_subsystem(in.file), fix);
  write_output(output, write_code_file(to_code_file(h)), out);
  return kPass;
}

int cmd_examples(const std::string& action, const std::string& name, std::ostream& out) {
  if (action == "list") {
    for (const auto& e : catalog()) {
      out << e.name << "  " << format_params(e.expected) << "  " << e.description << '\n';
    }
    return kPass;
  }
  const CatalogEntry* e = find_example(name);
  if (!e) throw Error("unknown example '" + name + "'");
  out << e->text;
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hybrid quantum-classical stabilizer codes"};
  app.name("hybridqec");
  app.require_subcommand(1);

  std::string source, expect, emit, code1, code2, fix, output, text, action, name;
  std::optional<std::size_t> max_weight;
  std::size_t d = 1, c = 1;
  bool hybrid = false, correct = false, subsystem = false;

  auto* verify = app.add_subcommand("verify", "Validate a code and enumerate its distances");
  verify->add_option("code", source, "Example name or code file")->required();
  verify->add_option("--max-weight", max_weight, "Largest weight searched (default n if n <= 12, else 4)");
  verify->add_option("--expect", expect, "Expected parameters [[n,k:m,d:c]]_q");

  auto* bc = app.add_subcommand("bc", "Bacon-Casaccino construction from two classical codes");
  bc->add_option("--code1", code1, "Classical code file or repN")->required();
  bc->add_option("--code2", code2, "Classical code file or repN")->required();
  bc->add_flag("--hybrid", hybrid, "Gauge-fix into a hybrid code");
  bc->add_option("--emit", emit, "Write the constructed code here ('-' for stdout)");
  bc->add_option("--max-weight", max_weight, "Largest weight searched (default n)");

  auto* kl = app.add_subcommand("kl", "Dense Knill-Laflamme check");
  kl->add_option("code", source, "Example name or code file")->required();
  kl->add_option("--d", d, "Quantum distance to test")->required();
  kl->add_option("--c", c, "Classical distance to test")->required();
  kl->add_flag("--correct", correct, "Check the correction conditions");
  kl->add_flag("--subsystem", subsystem, "Check the block conditions on inner-code bases");

  auto* bounds = app.add_subcommand("bounds", "Singleton and trivial-split checks");
  bounds->add_option("params", text, "Parameters [[n,k:m,d:c]]_q")->required();

  auto* gfix = app.add_subcommand("gauge-fix", "Turn a subsystem code into a hybrid code");
  gfix->add_option("code", source, "Example name or subsystem code file")->required();
  gfix->add_option("--fix", fix, "One of Z/X per gauge pair (default all Z)");
  gfix->add_option("-o,--output", output, "Output file (default stdout)");

  auto* examples = app.add_subcommand("examples", "List or print built-in codes");
  examples->add_option("action", action, "list | emit")->required()->check(CLI::IsMember({"list", "emit"}));
  examples->add_option("name", name, "Example to print");

  std::vector<const char*> argv{"hybridqec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*verify) return cmd_verify(source, max_weight, expect, out);
    if (*bc) return cmd_bc(code1, code2, hybrid, emit, max_weight, out);
    if (*kl) return cmd_kl(source, d, c, correct, subsystem, out);
    if (*bounds) return cmd_bounds(text, out);
    if (*gfix) return cmd_gauge_fix(source, fix, output, out);
    if (*examples) {
      if (action == "emit" && name.empty()) throw Error("examples emit needs a NAME");
      return cmd_examples(action, name, out);
    }
  } catch (const DimensionTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace hqec::cli
