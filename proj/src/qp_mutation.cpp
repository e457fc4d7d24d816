#include "qpcluster/qp_mutation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "internal.hpp"
#include "qpcluster/equivalence.hpp"

namespace qpc {

namespace {

bool contains_any(const Word& w, const std::set<Label>& labels) {
  return std::any_of(w.begin(), w.end(), [&](const Label& l) { return labels.count(l) != 0; });
}

std::string pairs_to_string(const std::vector<std::pair<Vertex, Vertex>>& ps) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? ", " : "") << '{' << ps[i].first << ',' << ps[i].second << '}';
  return os.str();
}

}  // namespace

void validate_qp(const QP& qp) {
  for (const auto& [w, c] : qp.potential.terms())
    if (!is_cycle(qp.quiver, w))
      throw std::invalid_argument("potential term '" + format_word(w) + "' is not a cycle of the quiver");
  if (qp.degree) {
    auto r = check_homogeneous(qp.potential, qp_grading(qp));
    if (!r.homogeneous)
      throw std::invalid_argument("potential is not homogeneous of degree " + std::to_string(*qp.degree) +
                                  " (e.g. '" + format_word(r.offending.front().first) + "' has weight " +
                                  std::to_string(r.offending.front().second) + ")");
  }
}

Grading qp_grading(const QP& qp) {
  if (!qp.degree) throw std::logic_error("QP is not graded");
  return grading_of(qp.quiver, *qp.degree);
}

int premutated_valid_to(int n) {
  if (n == kExact) return kExact;
  return (2 * (n + 1) + 2) / 3 - 1;
}

QP premutate(const QP& qp, Vertex s) {
  std::optional<int> deg;
  if (qp.degree) deg = static_cast<int>(*qp.degree);
  QP out{detail::premutated_quiver(qp.quiver, s, deg), Potential(premutated_valid_to(qp.potential.valid_to())),
         qp.degree};
  const Quiver& q = qp.quiver;
  for (const auto& [u, c] : qp.potential.terms()) {
    std::size_t start = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (q.arrow(u[i]).source == s) {
        start = i;
        break;
      }
    const Word w = rotate(u, start);
    Word nw;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (q.arrow(w[i]).source == s) {
        nw.push_back(composite_label(w[i], w[i + 1]));
        ++i;
      } else {
        nw.push_back(w[i]);
      }
    }
    out.potential.add_cycle(nw, c);
  }
  for (const Arrow* a : q.arrows_out_of(s))
    for (const Arrow* b : q.arrows_into(s))
      out.potential.add_cycle({composite_label(a->label, b->label), reversed_label(b->label), reversed_label(a->label)},
                              1);
  if (qp.degree) {
    auto r = check_homogeneous(out.potential, qp_grading(out));
    if (!r.homogeneous) throw std::logic_error("graded premutation produced a non-homogeneous potential");
  }
  return out;
}

SplitResult split_reduce(const QP& qp, int order) {
  if (order < 2) throw std::invalid_argument("split_reduce: order must be at least 2");
  if (qp.potential.valid_to() < order)
    throw std::invalid_argument("split_reduce: potential is only known to length " +
                                std::to_string(qp.potential.valid_to()) + " < " + std::to_string(order));
  const Quiver& q = qp.quiver;
  const bool exact = qp.potential.is_exact();
  Potential w = exact ? qp.potential : truncate(qp.potential, order);
  const std::size_t cap = exact ? std::max<std::size_t>(w.max_length(), order) + 2 * static_cast<std::size_t>(order)
                                : static_cast<std::size_t>(order);
  bool dropped = false;
  SplitResult res;
  res.order = order;
  std::set<Label> trivial;
  std::map<Label, Label> partner;

  auto apply = [&](const Substitution& sigma) {
    w = sigma.apply_capped(w, cap, &dropped);
    res.substitution = res.substitution.then(sigma, cap);
  };

  // Linear step: bring the quadratic part into pairing form, one pivot at a time.
  for (const auto& [i, j] : q.two_cycles()) {
    auto free_arrows = [&](Vertex from, Vertex to) {
      std::vector<Label> out;
      for (const Arrow* a : q.arrows_between(from, to))
        if (!trivial.count(a->label)) out.push_back(a->label);
      std::sort(out.begin(), out.end());
      return out;
    };
    while (true) {
      const auto fwd = free_arrows(i, j);
      const auto bwd = free_arrows(j, i);
      std::size_t pk = 0, pl = 0;
      bool found = false;
      for (std::size_t k = 0; k < fwd.size() && !found; ++k)
        for (std::size_t l = 0; l < bwd.size() && !found; ++l)
          if (w.coefficient({fwd[k], bwd[l]}) != 0) {
            pk = k;
            pl = l;
            found = true;
          }
      if (!found) break;
      const Label& a = fwd[pk];
      const Label& b = bwd[pl];
      const Rational pivot = w.coefficient({a, b});
      NCPoly img = NCPoly::monomial({a});
      for (std::size_t k = 0; k < fwd.size(); ++k)
        if (k != pk) img.add({fwd[k]}, -w.coefficient({fwd[k], b}));
      img *= 1 / pivot;
      Substitution s1;
      s1.set(a, img);
      apply(s1);
      NCPoly img2 = NCPoly::monomial({b});
      for (std::size_t l = 0; l < bwd.size(); ++l)
        if (l != pl) img2.add({bwd[l]}, -w.coefficient({a, bwd[l]}));
      Substitution s2;
      s2.set(b, img2);
      apply(s2);
      trivial.insert(a);
      trivial.insert(b);
      partner[a] = b;
      partner[b] = a;
      res.trivial.emplace_back(a, b);
    }
  }

  // Higher terms: kill x p by the substitution y -> y - c p on the partner y of x.
  auto has_trivial_term_above = [&](std::size_t len) {
    for (const auto& [u, c] : w.terms())
      if (u.size() > len && contains_any(u, trivial)) return true;
    return false;
  };
  if (!trivial.empty()) {
    for (std::size_t d = 3;; ++d) {
      if (d > static_cast<std::size_t>(order) && (!exact || dropped || d > cap)) break;
      Substitution sigma;
      std::map<Label, NCPoly> corrections;
      for (const auto& [u, c] : w.terms()) {
        if (u.size() != d) continue;
        std::size_t pos = u.size();
        for (std::size_t i = 0; i < u.size(); ++i)
          if (trivial.count(u[i])) {
            pos = i;
            break;
          }
        if (pos == u.size()) continue;
        const Word r = rotate(u, pos);
        const Label& y = partner.at(r[0]);
        Word p(r.begin() + 1, r.end());
        corrections[y].add(p, -c);
      }
      if (corrections.empty()) {
        if (!has_trivial_term_above(d)) break;
        continue;
      }
      for (auto& [y, corr] : corrections) sigma.set(y, NCPoly::monomial({y}) + corr);
      apply(sigma);
    }
  }

  bool residual = false;
  for (const auto& [u, c] : w.terms())
    if (u.size() > 2 && contains_any(u, trivial)) residual = true;
  if (!exact || dropped || residual) w.set_valid_to(order);

  std::vector<Arrow> kept;
  for (const auto& a : q.arrows())
    if (!trivial.count(a.label)) kept.push_back(a);
  Quiver red(q.vertex_count(), q.principal_count(), std::move(kept));
  Potential wred(w.valid_to());
  for (const auto& [u, c] : w.terms()) {
    if (!contains_any(u, trivial)) {
      wred.add_cycle(u, c);
      continue;
    }
    const bool is_pair = u.size() == 2 && partner.count(u[0]) && partner.at(u[0]) == u[1] && c == 1;
    if (!is_pair)
      throw std::logic_error("split_reduce: reduction failure, leftover term '" + format_word(u) + "'");
  }
  res.reduced = QP{std::move(red), std::move(wred), qp.degree};
  return res;
}

MutationStep mutate_qp_step(const QP& qp, Vertex s, int order) {
  MutationStep step;
  step.premutated = premutate(qp, s);
  const int work = std::min(order, step.premutated.potential.valid_to());
  if (work < 2)
    throw std::invalid_argument("mutation needs the potential to at least length 2 after premutation (have " +
                                std::to_string(work) + ")");
  step.split = split_reduce(step.premutated, work);
  step.remaining_two_cycles = step.split.reduced.quiver.two_cycles();
  return step;
}

DegenerateMutation::DegenerateMutation(Vertex s, std::vector<std::pair<Vertex, Vertex>> w)
    : std::runtime_error("2-cycle remains after mutation at " + std::to_string(s) + ": " + pairs_to_string(w)),
      vertex(s),
      witness(std::move(w)) {}

QP mutate_qp(const QP& qp, Vertex s, int order) {
  MutationStep step = mutate_qp_step(qp, s, order);
  if (step.degenerate()) throw DegenerateMutation(s, step.remaining_two_cycles);
  return step.split.reduced;
}

int required_order(int t, int n) {
  if (t < 0 || n < 2) throw std::invalid_argument("required_order: need t >= 0 and n >= 2");
  mpz_class num = n, den = 1;
  for (int i = 0; i < t; ++i) {
    num *= 3;
    den *= 2;
  }
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (!q.fits_sint_p()) throw std::overflow_error("required_order: result too large");
  return static_cast<int>(q.get_si());
}

NondegeneracyReport check_nondegenerate(const QP& qp, const std::vector<Vertex>& seq,
                                        std::optional<std::uint64_t> rng_seed, int min_order) {
  if (!qp.quiver.is_two_cycle_free()) throw std::invalid_argument("check_nondegenerate: input quiver has a 2-cycle");
  for (Vertex s : seq)
    if (!qp.quiver.is_principal(s)) throw std::invalid_argument("sequence contains non-mutable vertex " + std::to_string(s));
  const int t = static_cast<int>(seq.size());
  NondegeneracyReport rep;
  rep.working_order = std::max(required_order(t, 2), min_order);
  QP cur = qp;
  if (rng_seed) {
    cur.potential = random_potential(qp.quiver, rep.working_order, *rng_seed);
    cur.degree.reset();
  } else if (qp.potential.valid_to() < rep.working_order) {
    throw std::invalid_argument("potential known only to length " + std::to_string(qp.potential.valid_to()) +
                                ", sequence of length " + std::to_string(t) + " needs " +
                                std::to_string(rep.working_order));
  } else if (!qp.potential.is_exact()) {
    cur.potential = truncate(qp.potential, rep.working_order);
  }
  for (int i = 0; i < t; ++i) {
    const int order = required_order(t - i - 1, 2);
    MutationStep step = mutate_qp_step(cur, seq[i], order);
    cur = step.split.reduced;
    if (step.degenerate()) {
      rep.failed_step = static_cast<std::size_t>(i + 1);
      rep.failed_vertex = seq[i];
      rep.witness = step.remaining_two_cycles;
      rep.final_qp = cur;
      return rep;
    }
  }
  rep.nondegenerate = true;
  rep.final_qp = cur;
  return rep;
}

QP restrict_qp(const QP& qp, const std::vector<Vertex>& vertices) {
  Quiver sub = induced_subquiver(qp.quiver, vertices);
  Potential w = restrict_potential(qp.potential, sub);
  return QP{std::move(sub), std::move(w), qp.degree};
}

QP glue_qp(const QP& qp, const std::vector<TreeAttachment>& trees) {
  return QP{glue_acyclic(qp.quiver, trees), qp.potential, qp.degree};
}

QP frame_qp(const QP& qp, Vertex marked) { return QP{frame_quiver(qp.quiver, marked), qp.potential, qp.degree}; }

bool restrict_and_mutate_commute_check(const QP& qp, const std::vector<Vertex>& sub_vertices, Vertex s, int order) {
  std::vector<Vertex> sorted = sub_vertices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto it = std::find(sorted.begin(), sorted.end(), s);
  if (it == sorted.end()) throw std::invalid_argument("mutation vertex lies outside the subquiver");
  const Vertex local = static_cast<Vertex>(it - sorted.begin()) + 1;
  const QP lhs = mutate_qp_step(restrict_qp(qp, sorted), local, order).result();
  const QP rhs = restrict_qp(mutate_qp_step(qp, s, order).result(), sorted);
  return equivalent_up_to_normal_form(lhs, rhs, order);
}

}  // namespace qpc
