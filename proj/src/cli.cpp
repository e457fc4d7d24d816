#include "qpcluster/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "qpcluster/equivalence.hpp"
#include "qpcluster/grading_solver.hpp"
#include "qpcluster/positivity.hpp"
#include "qpcluster/quantum_seed.hpp"
#include "qpcluster/quiver_file.hpp"

namespace qpc {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<long long> parse_list(const std::string& s, const char* what) {
  std::vector<long long> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoll(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  return out;
}

std::vector<Vertex> parse_sequence(const std::string& s) {
  std::vector<Vertex> seq;
  for (long long v : parse_list(s, "sequence")) seq.push_back(static_cast<Vertex>(v));
  return seq;
}

std::string pairs(const std::vector<std::pair<Vertex, Vertex>>& ps) {
  std::string out;
  for (const auto& [i, j] : ps) out += (out.empty() ? "" : ",") + std::to_string(i) + "-" + std::to_string(j);
  return out;
}

std::string seq_string(const std::vector<Vertex>& seq) {
  std::string out;
  for (Vertex v : seq) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

struct Options {
  std::string file;
  std::string format = "text";
  int trunc = 4;
  std::optional<std::uint64_t> seed;
  std::string seq;
  std::optional<int> order;
  std::string cycles = "simple";
  bool positive_edges = false;
  std::string output = "-";
  std::string monomial;
  std::string basis = "ordered";
  bool machine() const { return format == "machine"; }
};

struct SeedSetup {
  QuantumSeed root;
  bool quantized = false;
};

SeedSetup seed_from(const QuiverDocument& doc, std::ostream& out, bool machine) {
  SeedSetup s;
  if (doc.lambda) {
    const ExchangeMatrix b = exchange_matrix(doc.qp.quiver);
    if (!check_compatible(b, *doc.lambda)) throw UsageError("lambda block is not compatible with the exchange matrix");
    s.root = initial_seed(b, *doc.lambda);
  } else {
    const Quantization qz = quantize(doc.qp.quiver);
    s.root = initial_seed(exchange_matrix(qz.quiver), qz.lambda);
    s.quantized = true;
    out << (machine ? "note quantized=" : "note: no lambda block; quantized by pendant frozen vertices, rank ")
        << qz.quiver.vertex_count() << '\n';
  }
  return s;
}

LatticeVector monomial_for(const Options& o, const QuantumSeed& seed) {
  auto v = parse_list(o.monomial, "monomial");
  if (v.size() > static_cast<std::size_t>(seed.rank())) throw UsageError("monomial has more entries than the seed rank");
  v.resize(seed.rank(), 0);
  return v;
}

void print_seed(const QuantumSeed& seed, std::ostream& out, bool machine) {
  if (machine) {
    out << "history " << seq_string(seed.history) << '\n';
    for (int i = 0; i < seed.b.rows(); ++i) {
      out << "b";
      for (int j = 0; j < seed.b.cols(); ++j) out << ' ' << seed.b(i, j);
      out << '\n';
    }
    for (int i = 0; i < seed.lambda.rows(); ++i) {
      out << "lambda";
      for (int j = 0; j < seed.lambda.cols(); ++j) out << ' ' << seed.lambda(i, j);
      out << '\n';
    }
    for (int i = 0; i < seed.rank(); ++i) out << "z " << i + 1 << ' ' << seed.z[i].to_string() << '\n';
    return;
  }
  out << "mutation sequence: " << (seed.history.empty() ? "(root)" : seq_string(seed.history)) << '\n';
  out << "exchange matrix:\n" << seed.b.to_string() << '\n';
  out << "commutation matrix:\n" << seed.lambda.to_string() << '\n';
  for (int i = 0; i < seed.rank(); ++i) out << "Z_" << i + 1 << " = " << seed.z[i].to_string() << '\n';
}

int cmd_check(const Options& o, std::ostream& out) {
  const QuiverDocument doc = read_quiver_file(o.file);
  const Quiver& q = doc.qp.quiver;
  const bool m = o.machine();
  out << (m ? "name " : "quiver: ") << doc.name << '\n';
  out << (m ? "vertices " : "vertices: ") << q.vertex_count() << '\n';
  out << (m ? "principal " : "principal: ") << q.principal_count() << '\n';
  out << (m ? "arrows " : "arrows: ") << q.arrow_count() << '\n';
  out << (m ? "two_cycle_free " : "2-cycle-free: ") << (q.is_two_cycle_free() ? "yes" : "no") << '\n';
  out << (m ? "acyclic " : "acyclic: ") << (q.is_acyclic() ? "yes" : "no") << '\n';
  out << (m ? "terms " : "potential terms: ") << doc.qp.potential.size() << '\n';
  out << (m ? "valid_to " : "potential known to length: ")
      << (doc.qp.potential.is_exact() ? std::string(m ? "exact" : "exact") : std::to_string(doc.qp.potential.valid_to()))
      << '\n';
  if (doc.qp.degree) {
    const auto r = check_homogeneous(doc.qp.potential, qp_grading(doc.qp));
    out << (m ? "homogeneous_degree " : "homogeneous of degree: ") << *doc.qp.degree << '\n';
    out << (m ? "cut " : "cut: ") << (r.is_cut ? "yes" : "no") << '\n';
  }
  if (!m) out << "exchange matrix:\n" << exchange_matrix(q).to_string() << '\n';
  if (doc.lambda)
    out << (m ? "compatible " : "lambda compatible: ")
        << (check_compatible(exchange_matrix(q), *doc.lambda) ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_mutate(const Options& o, std::ostream& out) {
  QuiverDocument doc = read_quiver_file(o.file);
  const auto seq = parse_sequence(o.seq);
  if (seq.empty()) throw UsageError("mutate needs --seq");
  const int t = static_cast<int>(seq.size());
  if (o.trunc < 2) throw UsageError("--trunc must be at least 2");
  const int work = required_order(t, o.trunc);
  if (doc.qp.potential.valid_to() < work)
    throw UsageError("potential known only to length " + std::to_string(doc.qp.potential.valid_to()) + ", need " +
                     std::to_string(work) + " for output to length " + std::to_string(o.trunc));
  QP cur = doc.qp;
  for (int i = 0; i < t; ++i) {
    MutationStep step = mutate_qp_step(cur, seq[i], required_order(t - i - 1, o.trunc));
    cur = step.result();
    if (step.degenerate()) {
      out << (o.machine() ? "degenerate step=" : "degenerate at step ") << i + 1
          << (o.machine() ? " vertex=" : " (vertex ") << seq[i] << (o.machine() ? " two_cycles=" : "), 2-cycles ")
          << pairs(step.remaining_two_cycles) << (o.machine() ? "" : "") << '\n';
      return kExitNegative;
    }
  }
  if (!cur.potential.is_exact() && cur.potential.valid_to() > o.trunc) cur.potential = truncate(cur.potential, o.trunc);
  doc.qp = cur;
  doc.lambda.reset();
  out << print_quiver(doc);
  return kExitOk;
}

int cmd_nondeg(const Options& o, std::ostream& out) {
  const QuiverDocument doc = read_quiver_file(o.file);
  const auto seq = parse_sequence(o.seq);
  if (seq.empty()) throw UsageError("nondeg needs --seq");
  NondegeneracyReport r;
  try {
    r = check_nondegenerate(doc.qp, seq, o.seed, o.order.value_or(0));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.machine()) {
    out << "working_order " << r.working_order << '\n';
    if (r.nondegenerate)
      out << "nondegenerate seq=" << seq_string(seq) << '\n';
    else
      out << "degenerate step=" << r.failed_step << " vertex=" << r.failed_vertex << " two_cycles=" << pairs(r.witness)
          << '\n';
  } else {
    out << "working order: " << r.working_order << '\n';
    if (r.nondegenerate)
      out << "nondegenerate along " << seq_string(seq) << '\n';
    else
      out << "degenerate at step " << r.failed_step << " (vertex " << r.failed_vertex << "): 2-cycles remain between "
          << pairs(r.witness) << '\n';
  }
  return r.nondegenerate ? kExitOk : kExitNegative;
}

int cmd_grading(const Options& o, std::ostream& out) {
  const QuiverDocument doc = read_quiver_file(o.file);
  const Quiver& q = doc.qp.quiver;
  GradingProblem p{q, {}, o.positive_edges ? GradingMode::PositiveEdges : GradingMode::DegreeOnly};
  if (o.cycles == "simple") {
    p.cycles = enumerate_simple_cycles(q, q.vertex_count());
  } else if (o.cycles == "potential") {
    for (const auto& [w, c] : doc.qp.potential.terms()) p.cycles.push_back(w);
  } else if (o.cycles.rfind("all:", 0) == 0) {
    const auto l = parse_list(o.cycles.substr(4), "cycle length");
    if (l.size() != 1 || l[0] < 2) throw UsageError("--cycles all:L needs L >= 2");
    p.cycles = enumerate_cycles(q, static_cast<int>(l[0]));
  } else {
    throw UsageError("--cycles must be simple, potential or all:L");
  }
  const bool m = o.machine();
  if (p.cycles.empty()) {
    out << (m ? "feasible degree=1 cycles=0\n" : "no constraint cycles: every grading is feasible\n");
    return kExitOk;
  }
  const auto r = find_grading(p);
  if (r.feasible) {
    if (m) {
      out << "feasible degree=" << r.degree << " cycles=" << p.cycles.size() << '\n';
      for (const auto& a : q.arrows()) out << "weight " << a.label << ' ' << r.weights.at(a.label) << '\n';
    } else {
      out << "feasible: degree " << r.degree << " over " << p.cycles.size() << " cycles\n";
      for (const auto& a : q.arrows()) out << "  |" << a.label << "| = " << r.weights.at(a.label) << '\n';
    }
    return kExitOk;
  }
  std::string row;
  for (const auto& y : r.witness) row += (row.empty() ? "" : ",") + y.get_str();
  if (m) {
    out << "infeasible cycles=" << p.cycles.size() << " witness=" << row;
    if (p.mode == GradingMode::DegreeOnly) out << " lhs=" << r.lhs.get_str() << " rhs=" << r.rhs.get_str();
    out << '\n';
    for (std::size_t i = 0; i < p.cycles.size(); ++i) out << "cycle " << i + 1 << ' ' << format_word(p.cycles[i]) << '\n';
  } else {
    out << "infeasible over " << p.cycles.size() << " cycles\n";
    for (std::size_t i = 0; i < p.cycles.size(); ++i)
      out << "  [" << r.witness[i].get_str() << "] " << format_word(p.cycles[i]) << '\n';
    if (p.mode == GradingMode::DegreeOnly)
      out << "combining the rows gives " << r.lhs.get_str() << "d = " << r.rhs.get_str() << "d\n";
    else
      out << "the combination has nonnegative arrow multiplicities, total <= 0 and positive length sum\n";
  }
  return kExitNegative;
}

int cmd_quantize(const Options& o, std::ostream& out) {
  QuiverDocument doc = read_quiver_file(o.file);
  const Quantization qz = quantize(doc.qp.quiver);
  doc.qp.quiver = qz.quiver;
  doc.lambda = qz.lambda;
  const std::string text = print_quiver(doc);
  if (o.output == "-") {
    out << text;
  } else {
    std::ofstream f(o.output);
    if (!f) throw UsageError("cannot write '" + o.output + "'");
    f << text;
    out << (o.machine() ? "wrote " : "wrote quantized quiver to ") << o.output << '\n';
  }
  return kExitOk;
}

int cmd_qmutate(const Options& o, std::ostream& out) {
  const QuiverDocument doc = read_quiver_file(o.file);
  const SeedSetup s = seed_from(doc, out, o.machine());
  const QuantumSeed seed = mutate_seed(s.root, parse_sequence(o.seq));
  print_seed(seed, out, o.machine());
  const auto perm = seed_permutation(s.root, seed);
  out << (o.machine() ? "periodic " : "returns to the initial seed up to permutation: ") << (perm ? "yes" : "no");
  if (perm) {
    std::string p;
    for (int i : *perm) p += (p.empty() ? "" : ",") + std::to_string(i + 1);
    out << (o.machine() ? " perm=" : " (") << p << (o.machine() ? "" : ")");
  }
  out << '\n';
  return kExitOk;
}

ExpansionBasis basis_of(const Options& o) {
  if (o.basis == "ordered") return ExpansionBasis::Ordered;
  if (o.basis == "symmetric") return ExpansionBasis::Symmetric;
  throw UsageError("--basis must be ordered or symmetric");
}

int cmd_expand(const Options& o, std::ostream& out) {
  const QuiverDocument doc = read_quiver_file(o.file);
  const SeedSetup s = seed_from(doc, out, o.machine());
  const QuantumSeed seed = mutate_seed(s.root, parse_sequence(o.seq));
  const auto n = monomial_for(o, seed);
  const auto exp = expand_monomial(seed, n, basis_of(o));
  for (auto it = exp.rbegin(); it != exp.rend(); ++it) {
    if (o.machine())
      out << "term " << format_lattice(it->first) << ' ' << it->second.to_string() << '\n';
    else
      out << "  (" << it->second.to_string() << ") Z^(" << format_lattice(it->first) << ")\n";
  }
  return kExitOk;
}

int cmd_positivity(const Options& o, std::ostream& out) {
  const QuiverDocument doc = read_quiver_file(o.file);
  const SeedSetup s = seed_from(doc, out, o.machine());
  const QuantumSeed seed = mutate_seed(s.root, parse_sequence(o.seq));
  const auto rep = positivity_report(seed, monomial_for(o, seed), basis_of(o));
  if (!o.machine()) out << "N is an exponent of v = q^(1/2); P_{N,k} = v^N (v^-k + ... + v^k)\n";
  for (auto it = rep.coefficients.rbegin(); it != rep.coefficients.rend(); ++it) {
    const auto& c = *it;
    const std::string status = c.lefschetz.ok ? "ok" : "fail:" + c.lefschetz.failure;
    if (o.machine()) {
      out << "coeff " << format_lattice(c.k) << " N=" << (c.lefschetz.ok ? std::to_string(c.lefschetz.decomposition.center) : "-")
          << " parts=" << format_parts(c.lefschetz.decomposition) << " status=" << status << '\n';
    } else {
      out << "  Z^(" << format_lattice(c.k) << "): " << c.coefficient.to_string();
      if (c.lefschetz.ok)
        out << "  = sum of P_{" << c.lefschetz.decomposition.center << ",k} with k:m " << format_parts(c.lefschetz.decomposition);
      else
        out << "  FAILS (" << c.lefschetz.failure << ")";
      out << '\n';
    }
  }
  if (o.machine())
    out << "summary positive=" << rep.all_positive << " lefschetz=" << rep.all_lefschetz
        << " uniform_parity=" << rep.all_uniform_parity << '\n';
  else
    out << "all positive: " << (rep.all_positive ? "yes" : "no") << ", all Lefschetz: " << (rep.all_lefschetz ? "yes" : "no")
        << ", uniform v-parity per coefficient (Laurent in q after v -> -v if odd): "
        << (rep.all_uniform_parity ? "yes" : "no") << '\n';
  return rep.all_lefschetz ? kExitOk : kExitNegative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact quivers with potentials and quantum cluster algebras", "qpc"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--trunc", o.trunc, "Path length to which output potentials are kept");
  app.add_option("--rand-seed", o.seed, "Seed for random potentials");

  auto with_file = [&](CLI::App* sub) { sub->add_option("file", o.file, "Quiver file")->required(); };
  auto* check = app.add_subcommand("check", "Validate a quiver file and summarise it");
  with_file(check);
  auto* mutate = app.add_subcommand("mutate", "Mutate the QP along a sequence");
  with_file(mutate);
  mutate->add_option("--seq", o.seq)->required();
  auto* nondeg = app.add_subcommand("nondeg", "Check nondegeneracy along a sequence");
  with_file(nondeg);
  nondeg->add_option("--seq", o.seq)->required();
  nondeg->add_option("--order", o.order, "Minimum working order");
  auto* grading = app.add_subcommand("grading", "Solve for an arrow grading");
  with_file(grading);
  grading->add_option("--cycles", o.cycles, "simple | potential | all:L");
  grading->add_flag("--positive-edges", o.positive_edges, "Require every arrow weight >= 1");
  auto* quant = app.add_subcommand("quantize", "Add pendant frozen vertices and a compatible lambda");
  with_file(quant);
  quant->add_option("-o", o.output, "Output file ('-' for stdout)");
  auto* qmut = app.add_subcommand("qmutate", "Mutate the quantum seed");
  with_file(qmut);
  qmut->add_option("--seq", o.seq)->required();
  auto* expand = app.add_subcommand("expand", "Laurent expansion of a cluster monomial in the root cluster");
  with_file(expand);
  expand->add_option("--seq", o.seq);
  expand->add_option("--monomial", o.monomial)->required();
  expand->add_option("--basis", o.basis, "ordered | symmetric");
  auto* pos = app.add_subcommand("positivity", "Lefschetz decomposition of expansion coefficients");
  with_file(pos);
  pos->add_option("--seq", o.seq);
  pos->add_option("--monomial", o.monomial)->required();
  pos->add_option("--basis", o.basis, "ordered | symmetric");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }
  try {
    if (*check) return cmd_check(o, out);
    if (*mutate) return cmd_mutate(o, out);
    if (*nondeg) return cmd_nondeg(o, out);
    if (*grading) return cmd_grading(o, out);
    if (*quant) return cmd_quantize(o, out);
    if (*qmut) return cmd_qmutate(o, out);
    if (*expand) return cmd_expand(o, out);
    if (*pos) return cmd_positivity(o, out);
  } catch (const ParseError& e) {
    err << o.file << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qpc
