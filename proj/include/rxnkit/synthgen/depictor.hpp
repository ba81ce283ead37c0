#pragma once

#include <string_view>

#include "rxnkit/core/rng.hpp"
#include "rxnkit/synthgen/glyph.hpp"

namespace rxnkit::synthgen {

// Turns a SMILES string into a Molecule glyph. Implementations must be
// deterministic for a fixed (smiles, scale, rng state).
class Depictor {
 public:
  virtual ~Depictor() = default;
  virtual Glyph depict(std::string_view smiles, double scale, Rng& rng) const = 0;
};

// Placeholder depiction: a rounded frame labelled with the molecular formula
// obtained by element counting. No 2D coordinates are computed.
class FormulaDepictor final : public Depictor {
 public:
  Glyph depict(std::string_view smiles, double scale, Rng& rng) const override;
};

const Depictor& default_depictor();

}  // namespace rxnkit::synthgen
