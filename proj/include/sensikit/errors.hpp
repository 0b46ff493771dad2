#pragma once

#include <stdexcept>
#include <string>

namespace sensikit {

// Base class for all toolkit errors. Subtypes map onto CLI exit codes:
// validation/parse/config/schema -> 2, budget -> 3, alignment -> 4,
// model -> 5, empty selection -> 6.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file (bad record, missing column, unreadable value).
struct parse_error : error {
    using error::error;
};

// Semantically invalid values: inverted ranges, out-of-domain points,
// unusable metric cutoffs.
struct validation_error : error {
    using error::error;
};

// Unusable parameters: odd Morris p, unknown builtin model, dimension
// beyond the direction-number table, bad flag combinations.
struct config_error : error {
    using error::error;
};

// A requested design would exceed the row budget guard.
struct budget_error : error {
    using error::error;
};

// Evaluations do not match the design they claim to belong to
// (row count, run ids, or content hash).
struct alignment_error : error {
    using error::error;
};

// A named metric or column is absent from an evaluation set.
struct schema_error : error {
    using error::error;
};

// Model invocation or integration failed in a way that poisons the
// whole campaign (as opposed to per-row failures, which are recorded).
struct model_error : error {
    using error::error;
};

// A screening or pipeline stage selected nothing to carry forward.
struct empty_selection_error : error {
    using error::error;
};

}  // namespace sensikit
