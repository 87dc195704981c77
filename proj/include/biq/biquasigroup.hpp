#pragma once

#include "biq/cayley_table.hpp"

namespace biq {

/// Two quasigroup operations ∘ (circ) and * (star) on one carrier.
class Biquasigroup {
 public:
  /// Throws biq::Error on an order mismatch or if either table is not Latin;
  /// the message names the table and the offending row or column.
  Biquasigroup(CayleyTable circ, CayleyTable star);

  const CayleyTable& circ() const noexcept { return circ_; }
  const CayleyTable& star() const noexcept { return star_; }
  std::size_t order() const noexcept { return circ_.order(); }

  friend bool operator==(const Biquasigroup&, const Biquasigroup&) = default;

 private:
  CayleyTable circ_;
  CayleyTable star_;
};

}  // namespace biq
