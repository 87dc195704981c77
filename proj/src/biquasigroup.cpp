#include "biq/biquasigroup.hpp"

#include <string>

#include "biq/error.hpp"

namespace biq {

namespace {

void require_latin(const CayleyTable& table, const char* name) {
  if (const auto v = find_latin_violation(table)) {
    throw Error(std::string(name) + " table is not a Latin square: " +
                (v->in_row ? "row " : "column ") + std::to_string(v->line) +
                " repeats value " + std::to_string(v->value));
  }
}

}  // namespace

Biquasigroup::Biquasigroup(CayleyTable circ, CayleyTable star)
    : circ_(std::move(circ)), star_(std::move(star)) {
  if (circ_.order() != star_.order()) {
    throw Error("order mismatch: circ has order " + std::to_string(circ_.order()) +
                ", star has order " + std::to_string(star_.order()));
  }
  require_latin(circ_, "circ");
  require_latin(star_, "star");
}

}  // namespace biq
