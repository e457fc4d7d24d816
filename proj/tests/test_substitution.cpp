#include <doctest.h>

#include "qpcluster/substitution.hpp"

using namespace qpc;

TEST_CASE("identity substitution") {
  Substitution id;
  CHECK(id.is_identity());
  Potential w;
  w.add_cycle({"a", "b", "c"}, 2);
  CHECK(id.apply(w, 10).terms() == w.terms());
  id.set("a", NCPoly::monomial({"a"}));
  CHECK(id.is_identity());
}

TEST_CASE("apply expands words and truncates") {
  Substitution s;
  s.set("a", NCPoly::monomial({"a"}) + NCPoly::monomial({"a", "b", "a"}, Rational(1, 2)));
  const NCPoly img = s.apply(Word{"a", "b"}, 10);
  CHECK(img == NCPoly::monomial({"a", "b"}) + NCPoly::monomial({"a", "b", "a", "b"}, Rational(1, 2)));
  bool dropped = false;
  const NCPoly cut = s.apply(Word{"a", "b"}, 3, &dropped);
  CHECK(dropped);
  CHECK(cut == NCPoly::monomial({"a", "b"}));
  CHECK(s.is_unitriangular());
  Substitution scale;
  scale.set("a", NCPoly::monomial({"a"}, 2));
  CHECK_FALSE(scale.is_unitriangular());
}

TEST_CASE("composition applies the first map first") {
  Substitution f, g;
  f.set("a", NCPoly::monomial({"a"}) + NCPoly::monomial({"b", "c"}));
  g.set("b", NCPoly::monomial({"b"}, 3));
  const Substitution fg = f.then(g, 10);
  const Word w{"a", "x"};
  CHECK(fg.apply(w, 10) == g.apply(f.apply(w, 10), 10));
  CHECK(fg.image("a") == NCPoly::monomial({"a"}) + NCPoly::monomial({"b", "c"}, 3));
  CHECK(fg.image("b") == NCPoly::monomial({"b"}, 3));
}
