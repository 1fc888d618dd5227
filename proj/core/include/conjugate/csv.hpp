#pragma once

#include <iosfwd>

#include "conjugate/fourier.hpp"
#include "conjugate/signal.hpp"

namespace conjugate {

// Signal interchange: header `index,coordinate,re,im`, one row per grid
// point, '.' decimal separator, 17 significant digits.
void write_csv(std::ostream& out, const SampledSignal& signal);
void write_csv(std::ostream& out, const Spectrum& spectrum);

// Reads the layout written by write_csv. Coordinates must be uniform to
// 1e-6 of a step; throws ParameterError with the offending line otherwise.
SampledSignal read_csv(std::istream& in, Domain domain = Domain::generic);

}  // namespace conjugate
