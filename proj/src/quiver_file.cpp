#include "qpcluster/quiver_file.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace qpc {

ParseError::ParseError(int l, const std::string& message)
    : std::runtime_error("line " + std::to_string(l) + ": " + message), line(l) {}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

long long to_integer(const std::string& s, int line) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + s + "'");
  }
}

}  // namespace

QuiverDocument parse_quiver(const std::string& text) {
  QuiverDocument doc;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  std::optional<long long> n, m, degree, truncation;
  std::vector<Arrow> arrows;
  std::vector<std::pair<int, std::vector<long long>>> lambda_rows;
  std::vector<std::pair<int, std::pair<Rational, Word>>> terms;
  bool in_lambda = false, in_potential = false, seen_header = false, ended = false;
  bool has_lambda = false;
  while (std::getline(in, raw)) {
    ++line;
    auto tok = tokens_of(raw);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (ended) throw ParseError(line, "content after 'end'");
    const std::string& key = tok[0];
    if (in_lambda && (lambda_rows.size() < static_cast<std::size_t>(n.value_or(0)))) {
      std::vector<long long> row;
      for (const auto& t : tok) row.push_back(to_integer(t, line));
      lambda_rows.emplace_back(line, std::move(row));
      continue;
    }
    in_lambda = false;
    if (in_potential && key != "term" && key != "end") throw ParseError(line, "expected 'term' or 'end' in potential block");
    if (!seen_header && key != "quiver") throw ParseError(line, "document must start with 'quiver <name>'");
    if (key == "quiver") {
      if (seen_header) throw ParseError(line, "duplicate 'quiver' line");
      if (tok.size() != 2) throw ParseError(line, "usage: quiver <name>");
      seen_header = true;
      doc.name = tok[1];
    } else if (key == "vertices") {
      if (tok.size() != 2 || n) throw ParseError(line, "usage: vertices <n> (once)");
      n = to_integer(tok[1], line);
      if (*n < 1) throw ParseError(line, "vertex count must be positive");
    } else if (key == "principal") {
      if (tok.size() != 2 || m) throw ParseError(line, "usage: principal <m> (once)");
      m = to_integer(tok[1], line);
    } else if (key == "degree") {
      if (tok.size() != 2 || degree) throw ParseError(line, "usage: degree <d> (once)");
      degree = to_integer(tok[1], line);
      if (*degree < 1) throw ParseError(line, "degree must be positive");
    } else if (key == "truncation") {
      if (tok.size() != 2 || truncation) throw ParseError(line, "usage: truncation <N> (once)");
      truncation = to_integer(tok[1], line);
      if (*truncation < 0) throw ParseError(line, "truncation must be nonnegative");
    } else if (key == "arrow") {
      if (!(tok.size() == 4 || (tok.size() == 6 && tok[4] == "weight")))
        throw ParseError(line, "usage: arrow <label> <src> <dst> [weight <w>]");
      Arrow a{tok[1], static_cast<Vertex>(to_integer(tok[2], line)), static_cast<Vertex>(to_integer(tok[3], line)), 1};
      if (tok.size() == 6) a.weight = static_cast<int>(to_integer(tok[5], line));
      if (a.source == a.target) throw ParseError(line, "arrow '" + a.label + "' is a loop");
      arrows.push_back(a);
    } else if (key == "lambda") {
      if (!n) throw ParseError(line, "'lambda' before 'vertices'");
      if (has_lambda) throw ParseError(line, "duplicate lambda block");
      has_lambda = in_lambda = true;
    } else if (key == "potential") {
      in_potential = true;
    } else if (key == "term") {
      if (!in_potential) throw ParseError(line, "'term' outside a potential block");
      if (tok.size() < 3) throw ParseError(line, "usage: term <p>/<q> <label> ...");
      Rational c;
      try {
        c = parse_rational(tok[1]);
      } catch (const std::exception&) {
        throw ParseError(line, "bad coefficient '" + tok[1] + "'");
      }
      terms.push_back({line, {c, Word(tok.begin() + 2, tok.end())}});
    } else if (key == "end") {
      ended = true;
    } else {
      throw ParseError(line, "unknown keyword '" + key + "'");
    }
  }
  if (!seen_header) throw ParseError(line, "empty document");
  if (!ended) throw ParseError(line, "missing 'end'");
  if (!n) throw ParseError(line, "missing 'vertices'");
  if (has_lambda && lambda_rows.size() != static_cast<std::size_t>(*n))
    throw ParseError(line, "lambda block needs " + std::to_string(*n) + " rows");
  try {
    doc.qp.quiver = Quiver(static_cast<int>(*n), static_cast<int>(m.value_or(*n)), arrows);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
  doc.qp.degree = degree;
  doc.qp.potential = Potential(truncation ? static_cast<int>(*truncation) : kExact);
  for (const auto& [l, t] : terms) {
    if (!is_cycle(doc.qp.quiver, t.second))
      throw ParseError(l, "term '" + format_word(t.second) + "' does not close into a cycle");
    if (truncation && static_cast<long long>(t.second.size()) > *truncation)
      throw ParseError(l, "term longer than the declared truncation");
    doc.qp.potential.add_cycle(t.second, t.first);
  }
  if (has_lambda) {
    SkewForm lam(static_cast<int>(*n), static_cast<int>(*n));
    for (int i = 0; i < *n; ++i) {
      const auto& [l, row] = lambda_rows[i];
      if (row.size() != static_cast<std::size_t>(*n))
        throw ParseError(l, "lambda row needs " + std::to_string(*n) + " entries");
      for (int j = 0; j < *n; ++j) lam(i, j) = row[j];
    }
    if (!lam.is_skew_symmetric()) throw ParseError(lambda_rows.front().first, "lambda is not skew-symmetric");
    doc.lambda = lam;
  }
  try {
    validate_qp(doc.qp);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
  return doc;
}

QuiverDocument read_quiver_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_quiver(ss.str());
}

std::string print_quiver(const QuiverDocument& doc) {
  std::ostringstream os;
  const Quiver& q = doc.qp.quiver;
  os << "quiver " << doc.name << '\n';
  os << "vertices " << q.vertex_count() << '\n';
  os << "principal " << q.principal_count() << '\n';
  if (doc.qp.degree) os << "degree " << *doc.qp.degree << '\n';
  if (!doc.qp.potential.is_exact()) os << "truncation " << doc.qp.potential.valid_to() << '\n';
  for (const auto& a : q.arrows()) {
    os << "arrow " << a.label << ' ' << a.source << ' ' << a.target;
    if (a.weight != 1) os << " weight " << a.weight;
    os << '\n';
  }
  if (doc.lambda) {
    os << "lambda\n";
    for (int i = 0; i < doc.lambda->rows(); ++i) {
      for (int j = 0; j < doc.lambda->cols(); ++j) os << (j ? " " : "") << (*doc.lambda)(i, j);
      os << '\n';
    }
  }
  if (!doc.qp.potential.is_zero()) {
    os << "potential\n";
    for (const auto& [w, c] : doc.qp.potential.terms()) os << "term " << format_rational(c) << ' ' << format_word(w) << '\n';
  }
  os << "end\n";
  return os.str();
}

}  // namespace qpc
