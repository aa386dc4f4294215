#include "sspread/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace sspread {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

// Parses a finite double at the front of s, allowing a leading '+'.
std::optional<double> take_number(std::string_view& s) {
  std::string_view t = s;
  bool negate = false;
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
    negate = t[0] == '-';
    t.remove_prefix(1);
  }
  if (t.empty() || t[0] == '+' || t[0] == '-') return std::nullopt;
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
  if (ec != std::errc() || !std::isfinite(x)) return std::nullopt;
  s.remove_prefix(std::size_t(ptr - s.data()));
  return negate ? -x : x;
}

double parse_real(std::string_view token, std::size_t line) {
  std::string_view s = token;
  const auto x = take_number(s);
  if (!x || !s.empty()) fail(line, "bad number '" + std::string(token) + "'");
  return *x;
}

struct Line {
  std::size_t number;
  std::string_view text;
};

std::optional<std::string_view> directive(std::string_view text, std::string_view key) {
  if (text.substr(0, key.size()) != key) return std::nullopt;
  return text.substr(key.size());
}

}  // namespace

const CMatrix& InputFile::matrix() const {
  if (const auto* m = std::get_if<CMatrix>(&content)) return *m;
  throw Error(ErrorCode::mode_error, "expected a matrix file, got a diagonal specification");
}

const DiagSpec& InputFile::diag() const {
  if (const auto* d = std::get_if<DiagSpec>(&content)) return *d;
  throw Error(ErrorCode::mode_error, "expected a diagonal specification, got a matrix file");
}

HermMatrix InputFile::hermitian() const { return HermMatrix(matrix()); }

TailedMatrix InputFile::tailed() const { return TailedMatrix{matrix(), tail.value_or(Complex(0.0, 0.0))}; }

Complex parse_complex(std::string_view token) {
  const auto bad = [&] { return Error(ErrorCode::parse_error, "bad complex literal '" + std::string(token) + "'"); };
  std::string_view s = token;
  if (s == "i" || s == "+i") return {0.0, 1.0};
  if (s == "-i") return {0.0, -1.0};
  const auto first = take_number(s);
  if (!first) throw bad();
  if (s.empty()) return {*first, 0.0};
  if (s == "i") return {0.0, *first};
  if (s[0] != '+' && s[0] != '-') throw bad();
  if (s == "+i") return {*first, 1.0};
  if (s == "-i") return {*first, -1.0};
  const auto second = take_number(s);
  if (!second || s != "i") throw bad();
  return {*first, *second};
}

std::string format_real(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string format_complex(Complex z) {
  const double im = z.imag();
  return format_real(z.real()) + (std::signbit(im) ? "-" : "+") + format_real(std::abs(im)) + "i";
}

Model parse_mode(std::string_view name) {
  for (Model m : {Model::matrix, Model::compact, Model::diagonal}) {
    if (to_string(m) == name) return m;
  }
  throw Error(ErrorCode::parse_error, "unknown mode '" + std::string(name) + "'");
}

InputFile parse_input(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
    ++number;
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.remove_suffix(1);
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.front()))) raw.remove_prefix(1);
    if (raw.empty() || raw.front() == '#') continue;
    lines.push_back({number, raw});
  }
  if (lines.empty()) throw Error(ErrorCode::parse_error, "empty input");

  InputFile out;
  const auto read_mode = [&](const Line& l, std::string_view rest) {
    if (out.mode) fail(l.number, "duplicate mode directive");
    const auto words = split_ws(rest);
    if (words.size() != 1) fail(l.number, "mode takes one value");
    try {
      out.mode = parse_mode(words[0]);
    } catch (const Error& e) {
      fail(l.number, e.what());
    }
  };

  const auto header = split_ws(lines[0].text);
  if (header.size() == 2 && header[0] == "dim") {
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(header[1].data(), header[1].data() + header[1].size(), n);
    if (ec != std::errc() || ptr != header[1].data() + header[1].size() || n == 0) {
      fail(lines[0].number, "bad dimension '" + std::string(header[1]) + "'");
    }
    CMatrix m = CMatrix::Zero(Index(n), Index(n));
    std::size_t row = 0;
    for (std::size_t k = 1; k < lines.size(); ++k) {
      const Line& l = lines[k];
      if (auto rest = directive(l.text, "mode:")) {
        read_mode(l, *rest);
        continue;
      }
      if (auto rest = directive(l.text, "tail:")) {
        const auto words = split_ws(*rest);
        if (out.tail || words.size() != 1) fail(l.number, "tail takes one complex value");
        try {
          out.tail = parse_complex(words[0]);
        } catch (const Error& e) {
          fail(l.number, e.what());
        }
        continue;
      }
      const auto words = split_ws(l.text);
      if (row == n) fail(l.number, "more than " + std::to_string(n) + " rows");
      if (words.size() != n) fail(l.number, "expected " + std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j) {
        try {
          m(Index(row), Index(j)) = parse_complex(words[j]);
        } catch (const Error& e) {
          fail(l.number, e.what());
        }
      }
      ++row;
    }
    if (row != n) throw Error(ErrorCode::parse_error, "expected " + std::to_string(n) + " rows, got " + std::to_string(row));
    out.content = std::move(m);
    return out;
  }

  if (header.size() == 1 && header[0] == "diag") {
    DiagSpec spec;
    bool has_head = false, has_inf = false, has_sup = false;
    const auto scalar = [&](const Line& l, std::string_view rest) {
      const auto words = split_ws(rest);
      if (words.size() != 1) fail(l.number, "expected one number");
      return parse_real(words[0], l.number);
    };
    for (std::size_t k = 1; k < lines.size(); ++k) {
      const Line& l = lines[k];
      if (auto rest = directive(l.text, "mode:")) {
        read_mode(l, *rest);
      } else if (auto rest = directive(l.text, "head:")) {
        if (has_head) fail(l.number, "duplicate head");
        has_head = true;
        for (auto w : split_ws(*rest)) spec.head.push_back(parse_real(w, l.number));
      } else if (auto rest = directive(l.text, "liminf:")) {
        if (has_inf) fail(l.number, "duplicate liminf");
        has_inf = true;
        spec.liminf = scalar(l, *rest);
      } else if (auto rest = directive(l.text, "limsup:")) {
        if (has_sup) fail(l.number, "duplicate limsup");
        has_sup = true;
        spec.limsup = scalar(l, *rest);
      } else if (auto rest = directive(l.text, "generator:")) {
        if (spec.generator) fail(l.number, "duplicate generator");
        const auto words = split_ws(*rest);
        if (words.empty()) fail(l.number, "generator needs a rule");
        DiagGenerator g;
        try {
          g.rule = DiagGenerator::parse_rule(std::string(words[0]));
        } catch (const Error& e) {
          fail(l.number, e.what());
        }
        for (std::size_t j = 1; j < words.size(); ++j) g.params.push_back(parse_real(words[j], l.number));
        spec.generator = std::move(g);
      } else {
        fail(l.number, "unknown directive '" + std::string(l.text) + "'");
      }
    }
    if (!has_inf || !has_sup) throw Error(ErrorCode::parse_error, "diag needs liminf and limsup");
    if (spec.liminf > spec.limsup) throw Error(ErrorCode::parse_error, "liminf exceeds limsup");
    out.content = std::move(spec);
    return out;
  }

  fail(lines[0].number, "expected 'dim <n>' or 'diag'");
}

InputFile read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse_error, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

std::string serialize(const InputFile& file) {
  std::ostringstream out;
  if (const auto* m = std::get_if<CMatrix>(&file.content)) {
    out << "dim " << m->rows() << '\n';
    if (file.mode) out << "mode: " << to_string(*file.mode) << '\n';
    if (file.tail) out << "tail: " << format_complex(*file.tail) << '\n';
    for (Index i = 0; i < m->rows(); ++i) {
      for (Index j = 0; j < m->cols(); ++j) out << (j ? " " : "") << format_complex((*m)(i, j));
      out << '\n';
    }
    return out.str();
  }
  const DiagSpec& d = std::get<DiagSpec>(file.content);
  out << "diag\n";
  if (file.mode) out << "mode: " << to_string(*file.mode) << '\n';
  out << "head:";
  for (double x : d.head) out << ' ' << format_real(x);
  out << "\nliminf: " << format_real(d.liminf) << "\nlimsup: " << format_real(d.limsup) << '\n';
  if (d.generator) {
    out << "generator: " << DiagGenerator::rule_name(d.generator->rule);
    for (double p : d.generator->params) out << ' ' << format_real(p);
    out << '\n';
  }
  return out.str();
}

}  // namespace sspread
