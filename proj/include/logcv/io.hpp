#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "logcv/cfinite.hpp"
#include "logcv/certify.hpp"
#include "logcv/convolve.hpp"

namespace logcv::io {

using Json = nlohmann::ordered_json;

/// Scalars travel as their exact text encoding, which Scalar::parse reads back.
Json to_json(const Scalar& x);
Json to_json(const Sequence& s);
Json to_json(const DepthResult& d);
Json to_json(const Certificate& c);
Json to_json(const RecurrenceAnsatz& r);
Json to_json(const SweepRow& row);
Json to_json(const ProbeRow& row);

std::string to_csv(const Sequence& s);

/// Minimal exponent table layout: poly, m = 1..m_max, inf. Missing entries are empty cells.
std::string table_csv(const std::vector<SweepRow>& rows, int m_max);

/// Reads a sequence from CSV text or from JSON: either an array of scalars or
/// an object carrying one under "terms" (the shape `fixpoint` prints).
Sequence read_sequence(std::string_view text, SeqKind kind = SeqKind::FinitePolynomial);

/// One CSV sequence per line; blank lines and '#' comments are skipped.
std::vector<Sequence> read_sequence_list(std::istream& in);

}  // namespace logcv::io
