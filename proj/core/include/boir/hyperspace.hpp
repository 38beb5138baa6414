// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boir/retrieval.hpp"
#include "boir/rng.hpp"

namespace boir {

enum class DimKind { Boolean, Categorical, Integer, Real };

/// One search dimension. A dimension is active when its gating conditions
/// hold: `requires_rm` ties it to one retrieval model, `requires_prf` to
/// feedback being enabled.
struct Dimension {
    std::string name;
    DimKind kind;
    double lo = 0;
    double hi = 0;
    std::optional<RetrievalModel> requires_rm;
    bool requires_prf = false;
};

/// Number of coordinates a configuration encodes to: 2 booleans, a 5-way
/// one-hot model block, the prf flag, and 14 scaled numeric slots.
inline constexpr std::size_t kEncodedDim = 22;

class SpaceDef {
public:
    /// The full 18-dimension conditional search space: preprocessing toggles,
    /// the model choice, each model's weighting parameters, and the feedback
    /// block.
    static SpaceDef standard();

    const std::vector<Dimension>& dimensions() const { return dims_; }
    const Dimension& dim(std::string_view name) const;

    /// Replaces a numeric dimension's range. Throws UserError for unknown or
    /// non-numeric dimensions or an empty range.
    void override_range(std::string_view name, double lo, double hi);

    /// Applies `name=lo:hi` pairs from a key=value text.
    void apply_overrides(std::string_view text);

    /// Human-readable table (name, kind, range, activation), one line per
    /// dimension.
    std::string reference_text() const;

private:
    std::vector<Dimension> dims_;
};

/// One full assignment of every search dimension. Inactive values are carried
/// but ignored by scoring and imputed in the encoding.
struct ConfigPoint {
    bool stopper = false;
    bool stemmer = false;
    RetrievalModel rm = RetrievalModel::LM_DIR;
    double tfidf_k1 = 1.5;
    double tfidf_b = 0.5;
    double bm25_k1 = 5.5;
    double bm25_k3 = 5.5;
    double bm25_b = 0.5;
    double lambda_doc = 0.5;
    double lambda_col = 0.5;
    double mu_dir = 1000.0;
    double mu_ts = 1500.0;
    double lambda_ts = 0.5;
    bool prf = false;
    double fbDocs = 10.0;
    double fbTerms = 10.0;
    double fbMu = 0.0;
    double fbOrigWeight = 0.5;

    /// Numeric dimension access by name (not stopper/stemmer/rm/prf).
    double get(std::string_view name) const;
    void set(std::string_view name, double v);

    bool dim_active(const Dimension& d) const;

    IndexVariant variant() const { return IndexVariant{stopper, stemmer}; }

    /// Materializes a scoring configuration (integer dimensions rounded).
    RetrievalConfig retrieval_config() const;

    /// key=value pairs for all dimensions, joined by `sep`; numeric values
    /// round-trip exactly.
    std::string serialize(char sep = '\n') const;

    /// Parses key=value text; missing keys keep their defaults, unknown keys
    /// and malformed values are rejected.
    static ConfigPoint parse(std::string_view text, char sep = '\n');

    bool operator==(const ConfigPoint&) const = default;
};

/// Range violations (empty when the point is valid).
std::vector<std::string> validate(const SpaceDef& space, const ConfigPoint& point);

/// Uniform draw: booleans and the model first, then each active numeric
/// dimension uniformly over its range; inactive dimensions take their range
/// midpoint. Always validates clean.
ConfigPoint sample_random(const SpaceDef& space, Rng& rng);

/// Maps a valid point to [0,1]^22: booleans to {0,1}, the model to one-hot,
/// reals min-max scaled, integers scaled by (v-1)/49, inactive numeric slots
/// fixed at 0.5. Throws InvalidPoint on validation failure.
std::vector<double> encode(const SpaceDef& space, const ConfigPoint& point);

}  // namespace boir
