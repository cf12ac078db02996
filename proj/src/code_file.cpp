#include "hybridqec/code_file.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include "hybridqec/errors.hpp"

namespace hqec {
namespace {

struct Line {
  std::size_t number;
  std::size_t indent;  // column offset of `text` within the raw line
  std::string_view text;
};

// Non-blank lines with comments and surrounding whitespace removed.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t start = 0;
    while (start < raw.size() && (raw[start] == ' ' || raw[start] == '\t')) ++start;
    std::size_t end = raw.size();
    while (end > start && (raw[end - 1] == ' ' || raw[end - 1] == '\t')) --end;
    if (end > start) out.push_back({number, start, raw.substr(start, end - start)});
  }
  return out;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

long long to_int(std::string_view word, const Line& line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    const auto col = static_cast<std::size_t>(word.data() - line.text.data()) + line.indent + 1;
    throw ParseError("expected an integer, got '" + std::string(word) + "'", line.number, col);
  }
  return v;
}

PauliOperator parse_row(const Line& line, const FieldRef& spec, std::size_t n) {
  PauliOperator e = [&] {
    try {
      return parse_pauli(line.text, spec);
    } catch (const ParseError& err) {
      const std::string what = err.what();
      const auto cut = what.find(" (column");
      throw ParseError(cut == std::string::npos ? what : what.substr(0, cut), line.number,
                       line.indent + err.column());
    }
  }();
  if (e.n() != n) {
    throw ParseError("row has " + std::to_string(e.n()) + " qudits, expected " + std::to_string(n),
                     line.number, line.indent + 1);
  }
  return e;
}

void write_rows(std::ostringstream& out, const char* name, const std::vector<PauliOperator>& rows) {
  out << '[' << name << "]\n";
  for (const auto& e : rows) out << format_pauli(e) << '\n';
}

}  // namespace

CodeFile parse_code_file(std::string_view text) {
  CodeFile file;
  long long q = 0;
  std::vector<int> poly;
  bool have_n = false;
  std::string section;
  bool saw_stabilizer = false, saw_quantum = false, saw_classical = false;
  std::map<std::string, std::pair<std::size_t, std::size_t>> headers;  // first (line, column) of each section

  for (const Line& line : content_lines(text)) {
    if (line.text.front() == '[') {
      if (line.text.back() != ']') throw ParseError("unterminated section header", line.number, line.indent + 1);
      if (q == 0 || !have_n) throw ParseError("'q' and 'n' must precede the sections", line.number, line.indent + 1);
      section = std::string(line.text.substr(1, line.text.size() - 2));
      headers.emplace(section, std::make_pair(line.number, line.indent + 1));
      if (section == "stabilizer") {
        saw_stabilizer = true;
      } else if (section == "quantum_stabilizer") {
        saw_quantum = true;
      } else if (section == "classical_stabilizer") {
        saw_classical = true;
      } else if (section == "translations") {
        file.has_translations = true;
      } else if (section != "gauge_x" && section != "gauge_z") {
        throw ParseError("unknown section [" + section + "]", line.number, line.indent + 2);
      }
      if (!file.spec) {
        file.spec = poly.empty() ? FieldSpec::builtin(static_cast<int>(q)) : [&] {
          const FieldRef base = FieldSpec::builtin(static_cast<int>(q));
          return FieldSpec::make(base->p(), base->ell(), poly);
        }();
      }
      continue;
    }
    if (section.empty()) {
      const auto words = split_words(line.text);
      if (words[0] == "q" && words.size() == 2) {
        q = to_int(words[1], line);
        if (q < 2) throw ParseError("field order must be at least 2", line.number, line.indent + 3);
        try {
          FieldSpec::builtin(static_cast<int>(q));
        } catch (const InvalidField& e) {
          throw ParseError(e.what(), line.number, line.indent + 3);
        }
      } else if (words[0] == "n" && words.size() == 2) {
        const long long n = to_int(words[1], line);
        if (n < 1) throw ParseError("n must be positive", line.number, line.indent + 3);
        file.n = static_cast<std::size_t>(n);
        have_n = true;
      } else if (words[0] == "poly" && words.size() >= 3) {
        poly.clear();
        for (std::size_t i = 1; i < words.size(); ++i) poly.push_back(static_cast<int>(to_int(words[i], line)));
      } else {
        throw ParseError("expected 'q <int>', 'n <int>' or 'poly <coefficients>'", line.number, line.indent + 1);
      }
      continue;
    }
    PauliOperator row = parse_row(line, file.spec, file.n);
    if (section == "stabilizer" || section == "quantum_stabilizer") {
      file.stabilizer.push_back(std::move(row));
    } else if (section == "gauge_x") {
      file.gauge_x.push_back(std::move(row));
    } else if (section == "gauge_z") {
      file.gauge_z.push_back(std::move(row));
    } else if (section == "classical_stabilizer") {
      file.classical.push_back(std::move(row));
    } else {
      file.translations.push_back(std::move(row));
    }
  }

  // Layout errors point at the header of the offending section.
  auto fail_at = [&](std::initializer_list<const char*> sections, const std::string& what) {
    std::pair<std::size_t, std::size_t> where{0, 0};
    for (const char* name : sections) {
      const auto it = headers.find(name);
      if (it != headers.end() && it->second.first > where.first) where = it->second;
    }
    throw ParseError(what, where.first, where.second);
  };
  if (saw_stabilizer == saw_quantum) {
    fail_at({"stabilizer", "quantum_stabilizer"}, "exactly one of [stabilizer] or [quantum_stabilizer] is required");
  }
  if (saw_stabilizer) {
    if (saw_classical || file.has_translations) {
      fail_at({"classical_stabilizer", "translations"},
              "[classical_stabilizer] and [translations] need [quantum_stabilizer]");
    }
    if (file.gauge_x.size() != file.gauge_z.size()) {
      fail_at({"gauge_x", "gauge_z"}, "[gauge_x] and [gauge_z] must have the same number of rows");
    }
    file.kind = CodeFile::Kind::subsystem;
  } else {
    if (!file.gauge_x.empty() || !file.gauge_z.empty()) {
      fail_at({"gauge_x", "gauge_z"}, "gauge sections need [stabilizer]");
    }
    file.kind = CodeFile::Kind::hybrid;
  }
  return file;
}

std::string write_code_file(const CodeFile& file) {
  std::ostringstream out;
  out << "q " << file.spec->q() << '\n' << "n " << file.n << '\n';
  if (file.spec->ell() > 1 && file.spec->poly() != FieldSpec::builtin(file.spec->q())->poly()) {
    out << "poly";
    for (int c : file.spec->poly()) out << ' ' << c;
    out << '\n';
  }
  if (file.kind == CodeFile::Kind::subsystem) {
    write_rows(out, "stabilizer", file.stabilizer);
    if (!file.gauge_x.empty()) {
      write_rows(out, "gauge_x", file.gauge_x);
      write_rows(out, "gauge_z", file.gauge_z);
    }
  } else {
    write_rows(out, "quantum_stabilizer", file.stabilizer);
    write_rows(out, "classical_stabilizer", file.classical);
    if (file.has_translations) write_rows(out, "translations", file.translations);
  }
  return out.str();
}

CodeFile to_code_file(const SubsystemCode& code) {
  CodeFile f;
  f.spec = code.spec();
  f.n = code.n();
  f.kind = CodeFile::Kind::subsystem;
  f.stabilizer = code.stabilizer().generators();
  for (const auto& gp : code.gauge_pairs()) {
    f.gauge_x.push_back(gp.x);
    f.gauge_z.push_back(gp.z);
  }
  return f;
}

CodeFile to_code_file(const HybridCode& code) {
  CodeFile f;
  f.spec = code.spec();
  f.n = code.n();
  f.kind = CodeFile::Kind::hybrid;
  f.stabilizer = code.quantum_stabilizer().generators();
  f.classical = code.classical_generators();
  f.translations = code.translations();
  f.has_translations = true;
  return f;
}

SubsystemCode make_subsystem(const CodeFile& file) {
  if (file.kind == CodeFile::Kind::hybrid) return as_subsystem(make_hybrid(file));
  std::vector<GaugePair> pairs;
  for (std::size_t i = 0; i < file.gauge_x.size(); ++i) pairs.push_back({file.gauge_x[i], file.gauge_z[i]});
  return SubsystemCode(file.spec, file.n, file.stabilizer, std::move(pairs));
}

HybridCode make_hybrid(const CodeFile& file) {
  if (file.kind == CodeFile::Kind::subsystem) return gauge_fix(make_subsystem(file));
  std::optional<std::vector<PauliOperator>> t;
  if (file.has_translations) t = file.translations;
  return HybridCode(file.spec, file.n, file.stabilizer, file.classical, t);
}

LinearCode parse_linear_code(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.size() < 2) throw ParseError("expected 'q <int>' and 'n <int> k <int>' header lines", 0, 0);
  const auto qw = split_words(lines[0].text);
  if (qw.size() != 2 || qw[0] != "q") throw ParseError("expected 'q <int>'", lines[0].number, lines[0].indent + 1);
  const long long q = to_int(qw[1], lines[0]);
  FieldRef spec;
  try {
    spec = FieldSpec::builtin(static_cast<int>(q));
  } catch (const InvalidField& e) {
    throw ParseError(e.what(), lines[0].number, lines[0].indent + 3);
  }
  const auto nw = split_words(lines[1].text);
  if (nw.size() != 4 || nw[0] != "n" || nw[2] != "k") {
    throw ParseError("expected 'n <int> k <int>'", lines[1].number, lines[1].indent + 1);
  }
  const long long n = to_int(nw[1], lines[1]);
  const long long k = to_int(nw[3], lines[1]);
  if (n < 1 || k < 0 || k > n) throw ParseError("need n >= 1 and 0 <= k <= n", lines[1].number, lines[1].indent + 1);
  if (lines.size() != static_cast<std::size_t>(k) + 2) {
    throw ParseError("expected " + std::to_string(k) + " generator rows, found " + std::to_string(lines.size() - 2),
                     lines.back().number, 1);
  }
  FqMatrix g;
  for (std::size_t r = 2; r < lines.size(); ++r) {
    const auto words = split_words(lines[r].text);
    if (words.size() != static_cast<std::size_t>(n)) {
      throw ParseError("expected " + std::to_string(n) + " symbols", lines[r].number, lines[r].indent + 1);
    }
    std::vector<Elem> row;
    for (const auto w : words) {
      const long long v = to_int(w, lines[r]);
      if (v < 0 || v >= q) {
        const auto col = static_cast<std::size_t>(w.data() - lines[r].text.data()) + lines[r].indent + 1;
        throw ParseError("symbol out of range", lines[r].number, col);
      }
      row.push_back(static_cast<Elem>(v));
    }
    g.push_back(std::move(row));
  }
  return LinearCode(spec, static_cast<std::size_t>(n), std::move(g));
}

std::string write_linear_code(const LinearCode& code) {
  std::ostringstream out;
  out << "q " << code.spec()->q() << '\n' << "n " << code.n() << " k " << code.k() << '\n';
  for (const auto& row : code.generator()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return out.str();
}

}  // namespace hqec
