#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "qpcluster/qp_mutation.hpp"
#include "qpcluster/quantum_torus.hpp"

namespace qpc {

/// Parsed quiver document.
///
///   quiver <name>
///   vertices <n>
///   principal <m>                       (default n)
///   degree <d>                          (the QP is graded by the arrow weights)
///   truncation <N>                      (potential known to path length N)
///   arrow <label> <src> <dst> [weight <w>]
///   lambda                              (followed by n integer rows)
///   potential                           (followed by term lines)
///   term <p>/<q> <label> ...            (product order, leftmost applied last)
///   end
///
/// '#' starts a comment line.
struct QuiverDocument {
  std::string name = "Q";
  QP qp;
  std::optional<SkewForm> lambda;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line;
};

QuiverDocument parse_quiver(const std::string& text);
QuiverDocument read_quiver_file(const std::string& path);
std::string print_quiver(const QuiverDocument& doc);

}  // namespace qpc
