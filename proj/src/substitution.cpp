#include "qpcluster/substitution.hpp"

#include <sstream>

namespace qpc {

void Substitution::set(const Label& a, NCPoly image) {
  if (image == NCPoly::monomial({a}))
    images_.erase(a);
  else
    images_[a] = std::move(image);
}

NCPoly Substitution::image(const Label& a) const {
  auto it = images_.find(a);
  return it == images_.end() ? NCPoly::monomial({a}) : it->second;
}

NCPoly Substitution::apply(const Word& w, std::size_t max_len, bool* dropped) const {
  NCPoly acc = NCPoly::monomial({});
  for (const auto& l : w) {
    auto it = images_.find(l);
    NCPoly next;
    if (it == images_.end()) {
      for (const auto& [p, c] : acc.terms()) {
        if (p.size() + 1 > max_len) {
          if (dropped) *dropped = true;
          continue;
        }
        Word q = p;
        q.push_back(l);
        next.add(q, c);
      }
    } else {
      for (const auto& [p, c] : acc.terms())
        for (const auto& [r, d] : it->second.terms()) {
          if (p.size() + r.size() > max_len) {
            if (dropped) *dropped = true;
            continue;
          }
          Word q = p;
          q.insert(q.end(), r.begin(), r.end());
          next.add(q, c * d);
        }
    }
    acc = std::move(next);
    if (acc.is_zero()) break;
  }
  return acc;
}

NCPoly Substitution::apply(const NCPoly& p, std::size_t max_len, bool* dropped) const {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) out += apply(w, max_len, dropped) * c;
  return out;
}

Potential Substitution::apply(const Potential& w, int order) const {
  const int v = std::min(w.valid_to(), order);
  Potential out(v);
  const std::size_t cap = v == kExact ? static_cast<std::size_t>(-1) : static_cast<std::size_t>(v);
  for (const auto& [u, c] : w.terms()) {
    const NCPoly img = apply(u, cap);
    for (const auto& [p, d] : img.terms()) out.add_cycle(p, c * d);
  }
  return out;
}

Potential Substitution::apply_capped(const Potential& w, std::size_t cap, bool* dropped) const {
  Potential out(w.valid_to());
  for (const auto& [u, c] : w.terms()) {
    const NCPoly img = apply(u, cap, dropped);
    for (const auto& [p, d] : img.terms()) out.add_cycle(p, c * d);
  }
  return out;
}

Substitution Substitution::then(const Substitution& next, std::size_t max_len) const {
  Substitution out;
  for (const auto& [a, img] : images_) out.set(a, next.apply(img, max_len));
  for (const auto& [a, img] : next.images_)
    if (!images_.count(a)) out.set(a, img.truncated(max_len));
  return out;
}

bool Substitution::is_unitriangular() const {
  for (const auto& [a, img] : images_) {
    for (const auto& [w, c] : img.terms()) {
      if (w.size() != 1) continue;
      if (w[0] == a ? c != 1 : true) return false;
    }
    if (img.coefficient({a}) != 1) return false;
  }
  return true;
}

std::string Substitution::to_string() const {
  if (images_.empty()) return "identity";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, img] : images_) {
    if (!first) os << "; ";
    first = false;
    os << a << " -> " << img.to_string();
  }
  return os.str();
}

}  // namespace qpc
