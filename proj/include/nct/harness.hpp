#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nct/functor.hpp"

namespace nct {

/// One ingested curve: a CM order, a published Mordell-Weil rank and its
/// provenance.  Ranks are external data and are never computed here.
struct CurveRecord {
    std::string label;
    CmOrder order;
    long rank = 0;
    std::string rank_source;
    std::optional<Rat> lambda;
    std::optional<std::string> notes;

    friend bool operator==(const CurveRecord&, const CurveRecord&) = default;
};

/// Loads a JSON array of records.  Schema (exact): required keys `label`
/// (string), `cm_d` (integer > 0), `form` ("sqrt"|"half"), `rank`
/// (integer >= 0), `rank_source` (nonempty string); optional `lambda`
/// (string rational "p/q") and `notes` (string).  Duplicate labels and
/// unknown keys are rejected.
std::vector<CurveRecord> load_dataset(const std::string& path);
std::vector<CurveRecord> parse_dataset(const std::string& text);

/// Field-for-field serialization of records; load/parse of the output
/// reproduces the records exactly.
std::string dataset_to_json(const std::vector<CurveRecord>& records);

enum class JConstant { standard_256, paper_64 };

/// j-invariant of the Legendre cubic y^2 = x(x-1)(x-lambda):
/// C (lambda^2 - lambda + 1)^3 / (lambda^2 (lambda-1)^2) with C = 256 by
/// default (normalized so the harmonic values give 1728) or C = 64 under
/// the compatibility flag.
Rat j_invariant_lambda(const Rat& lambda, JConstant constant = JConstant::standard_256);

/// One line of the conjecture report.  predicted_rank = complexity - 1
/// structurally; `agrees` is informational and never enforced.
struct ConjectureRow {
    std::string label;
    std::string theta;
    std::string generator;
    std::size_t complexity = 0;
    long predicted_rank = 0;
    long known_rank = 0;
    bool agrees = false;
    std::optional<std::string> error;

    friend bool operator==(const ConjectureRow&, const ConjectureRow&) = default;
};

/// Computes theta, its complexity and the predicted rank for every record,
/// in input order.  Per-record failures become error rows; the batch never
/// aborts.
std::vector<ConjectureRow> conjecture_report(const std::vector<CurveRecord>& records);

/// JSON array of row objects.
std::string report_to_json(const std::vector<ConjectureRow>& rows);

/// Fixed column order: label, theta, generator, complexity, predicted_rank,
/// known_rank, agrees.  Error rows carry "error: ..." in the theta column.
std::string report_to_tsv(const std::vector<ConjectureRow>& rows);

}  // namespace nct
