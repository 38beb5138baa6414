// SPDX-License-Identifier: Apache-2.0
#include "boir/hyperspace.hpp"

#include <cmath>

#include "boir/errors.hpp"
#include "boir/util.hpp"

namespace boir {

namespace {

constexpr std::size_t kModelCount = 5;

const RetrievalModel kModels[kModelCount] = {
    RetrievalModel::TFIDF, RetrievalModel::BM25, RetrievalModel::LM_JM,
    RetrievalModel::LM_DIR, RetrievalModel::LM_TS};

std::size_t model_index(RetrievalModel m) {
    for (std::size_t i = 0; i < kModelCount; ++i)
        if (kModels[i] == m) return i;
    return 0;
}

}  // namespace

SpaceDef SpaceDef::standard() {
    SpaceDef s;
    auto real = [](std::string name, double lo, double hi,
                   std::optional<RetrievalModel> rm = std::nullopt, bool prf = false) {
        return Dimension{std::move(name), DimKind::Real, lo, hi, rm, prf};
    };
    s.dims_ = {
        {"stopper", DimKind::Boolean, 0, 1, std::nullopt, false},
        {"stemmer", DimKind::Boolean, 0, 1, std::nullopt, false},
        {"rm", DimKind::Categorical, 0, kModelCount - 1, std::nullopt, false},
        real("tfidf_k1", 1, 2, RetrievalModel::TFIDF),
        real("tfidf_b", 0, 1, RetrievalModel::TFIDF),
        real("bm25_k1", 1, 10, RetrievalModel::BM25),
        real("bm25_k3", 1, 10, RetrievalModel::BM25),
        real("bm25_b", 0, 1, RetrievalModel::BM25),
        real("lambda_doc", 0, 1, RetrievalModel::LM_JM),
        real("lambda_col", 0, 1, RetrievalModel::LM_JM),
        real("mu_dir", 0, 3000, RetrievalModel::LM_DIR),
        real("mu_ts", 0, 3000, RetrievalModel::LM_TS),
        real("lambda_ts", 0, 1, RetrievalModel::LM_TS),
        {"prf", DimKind::Boolean, 0, 1, std::nullopt, false},
        {"fbDocs", DimKind::Integer, 1, 50, std::nullopt, true},
        {"fbTerms", DimKind::Integer, 1, 50, std::nullopt, true},
        real("fbMu", 0, 3000, std::nullopt, true),
        real("fbOrigWeight", 0, 1, std::nullopt, true),
    };
    return s;
}

const Dimension& SpaceDef::dim(std::string_view name) const {
    for (const auto& d : dims_)
        if (d.name == name) return d;
    throw UserError("unknown dimension: " + std::string(name));
}

void SpaceDef::override_range(std::string_view name, double lo, double hi) {
    for (auto& d : dims_) {
        if (d.name != name) continue;
        if (d.kind != DimKind::Real && d.kind != DimKind::Integer)
            throw UserError("dimension " + d.name + " has a fixed range");
        if (!(lo < hi)) throw UserError("empty range for dimension " + d.name);
        d.lo = lo;
        d.hi = hi;
        return;
    }
    throw UserError("unknown dimension: " + std::string(name));
}

void SpaceDef::apply_overrides(std::string_view text) {
    for (const auto& [name, value] : parse_kv(text)) {
        auto colon = value.find(':');
        double lo, hi;
        if (colon == std::string::npos || !parse_double(value.substr(0, colon), lo) ||
            !parse_double(value.substr(colon + 1), hi))
            throw UserError("range override must be lo:hi, got " + name + "=" + value);
        override_range(name, lo, hi);
    }
}

std::string SpaceDef::reference_text() const {
    std::string out = "name\tkind\trange\tactive_when\n";
    for (const auto& d : dims_) {
        out += d.name;
        out += '\t';
        switch (d.kind) {
            case DimKind::Boolean: out += "boolean\t{false,true}"; break;
            case DimKind::Categorical: {
                out += "categorical\t{";
                for (std::size_t i = 0; i < kModelCount; ++i) {
                    if (i) out += ',';
                    out += model_name(kModels[i]);
                }
                out += '}';
                break;
            }
            case DimKind::Integer:
                out += "integer\t[" + fmt_g(d.lo) + "," + fmt_g(d.hi) + "]";
                break;
            case DimKind::Real:
                out += "real\t[" + fmt_g(d.lo) + "," + fmt_g(d.hi) + "]";
                break;
        }
        out += '\t';
        if (d.requires_rm)
            out += "rm=" + std::string(model_name(*d.requires_rm));
        else if (d.requires_prf)
            out += "prf=true";
        else
            out += "always";
        out += '\n';
    }
    return out;
}

double ConfigPoint::get(std::string_view name) const {
    if (name == "tfidf_k1") return tfidf_k1;
    if (name == "tfidf_b") return tfidf_b;
    if (name == "bm25_k1") return bm25_k1;
    if (name == "bm25_k3") return bm25_k3;
    if (name == "bm25_b") return bm25_b;
    if (name == "lambda_doc") return lambda_doc;
    if (name == "lambda_col") return lambda_col;
    if (name == "mu_dir") return mu_dir;
    if (name == "mu_ts") return mu_ts;
    if (name == "lambda_ts") return lambda_ts;
    if (name == "fbDocs") return fbDocs;
    if (name == "fbTerms") return fbTerms;
    if (name == "fbMu") return fbMu;
    if (name == "fbOrigWeight") return fbOrigWeight;
    throw UserError("not a numeric dimension: " + std::string(name));
}

void ConfigPoint::set(std::string_view name, double v) {
    if (name == "tfidf_k1") tfidf_k1 = v;
    else if (name == "tfidf_b") tfidf_b = v;
    else if (name == "bm25_k1") bm25_k1 = v;
    else if (name == "bm25_k3") bm25_k3 = v;
    else if (name == "bm25_b") bm25_b = v;
    else if (name == "lambda_doc") lambda_doc = v;
    else if (name == "lambda_col") lambda_col = v;
    else if (name == "mu_dir") mu_dir = v;
    else if (name == "mu_ts") mu_ts = v;
    else if (name == "lambda_ts") lambda_ts = v;
    else if (name == "fbDocs") fbDocs = v;
    else if (name == "fbTerms") fbTerms = v;
    else if (name == "fbMu") fbMu = v;
    else if (name == "fbOrigWeight") fbOrigWeight = v;
    else throw UserError("not a numeric dimension: " + std::string(name));
}

bool ConfigPoint::dim_active(const Dimension& d) const {
    if (d.requires_rm && rm != *d.requires_rm) return false;
    if (d.requires_prf && !prf) return false;
    return true;
}

RetrievalConfig ConfigPoint::retrieval_config() const {
    RetrievalConfig c;
    c.model = rm;
    c.tfidf_k1 = tfidf_k1;
    c.tfidf_b = tfidf_b;
    c.bm25_k1 = bm25_k1;
    c.bm25_k3 = bm25_k3;
    c.bm25_b = bm25_b;
    c.lambda_doc = lambda_doc;
    c.lambda_col = lambda_col;
    c.mu_dir = mu_dir;
    c.mu_ts = mu_ts;
    c.lambda_ts = lambda_ts;
    c.prf = prf;
    c.fbDocs = std::llround(fbDocs);
    c.fbTerms = std::llround(fbTerms);
    c.fbMu = fbMu;
    c.fbOrigWeight = fbOrigWeight;
    return c;
}

std::string ConfigPoint::serialize(char sep) const {
    auto b = [](bool v) { return v ? "true" : "false"; };
    std::string out;
    auto kv = [&](std::string_view key, const std::string& value) {
        if (!out.empty()) out += sep;
        out += key;
        out += '=';
        out += value;
    };
    kv("stopper", b(stopper));
    kv("stemmer", b(stemmer));
    kv("rm", std::string(model_name(rm)));
    for (const char* name : {"tfidf_k1", "tfidf_b", "bm25_k1", "bm25_k3", "bm25_b",
                             "lambda_doc", "lambda_col", "mu_dir", "mu_ts", "lambda_ts"})
        kv(name, fmt_full(get(name)));
    kv("prf", b(prf));
    for (const char* name : {"fbDocs", "fbTerms", "fbMu", "fbOrigWeight"})
        kv(name, fmt_full(get(name)));
    return out;
}

ConfigPoint ConfigPoint::parse(std::string_view text, char sep) {
    ConfigPoint p;
    auto parse_bool = [](const std::string& key, const std::string& v) {
        if (v == "true" || v == "1") return true;
        if (v == "false" || v == "0") return false;
        throw InvalidPoint("bad boolean for " + key + ": " + v);
    };
    for (const auto& [key, value] : parse_kv(text, sep)) {
        if (key == "stopper") {
            p.stopper = parse_bool(key, value);
        } else if (key == "stemmer") {
            p.stemmer = parse_bool(key, value);
        } else if (key == "prf") {
            p.prf = parse_bool(key, value);
        } else if (key == "rm") {
            auto m = model_from_name(value);
            if (!m) throw InvalidPoint("unknown retrieval model: " + value);
            p.rm = *m;
        } else {
            double v;
            if (!parse_double(value, v))
                throw InvalidPoint("bad numeric value for " + key + ": " + value);
            try {
                p.set(key, v);
            } catch (const UserError&) {
                throw InvalidPoint("unknown configuration key: " + key);
            }
        }
    }
    return p;
}

std::vector<std::string> validate(const SpaceDef& space, const ConfigPoint& point) {
    std::vector<std::string> violations;
    for (const auto& d : space.dimensions()) {
        if (d.kind == DimKind::Boolean || d.kind == DimKind::Categorical) continue;
        const double v = point.get(d.name);
        if (!(v >= d.lo && v <= d.hi))
            violations.push_back(d.name + " out of [" + fmt_g(d.lo) + "," + fmt_g(d.hi) +
                                 "]: " + fmt_g(v));
    }
    return violations;
}

ConfigPoint sample_random(const SpaceDef& space, Rng& rng) {
    ConfigPoint p;
    for (const auto& d : space.dimensions()) {
        if (d.name == "stopper") {
            p.stopper = rng.flip();
        } else if (d.name == "stemmer") {
            p.stemmer = rng.flip();
        } else if (d.name == "rm") {
            p.rm = kModels[rng.below(kModelCount)];
        } else if (d.name == "prf") {
            p.prf = rng.flip();
        } else if (!p.dim_active(d)) {
            p.set(d.name, (d.lo + d.hi) / 2);
        } else if (d.kind == DimKind::Integer) {
            p.set(d.name, static_cast<double>(rng.uniform_int(
                              static_cast<long>(d.lo), static_cast<long>(d.hi))));
        } else {
            p.set(d.name, rng.uniform(d.lo, d.hi));
        }
    }
    return p;
}

std::vector<double> encode(const SpaceDef& space, const ConfigPoint& point) {
    auto violations = validate(space, point);
    if (!violations.empty()) {
        std::string msg = "invalid point:";
        for (const auto& v : violations) msg += " " + v + ";";
        throw InvalidPoint(msg);
    }
    std::vector<double> x;
    x.reserve(kEncodedDim);
    x.push_back(point.stopper ? 1.0 : 0.0);
    x.push_back(point.stemmer ? 1.0 : 0.0);
    for (std::size_t i = 0; i < kModelCount; ++i)
        x.push_back(i == model_index(point.rm) ? 1.0 : 0.0);
    x.push_back(point.prf ? 1.0 : 0.0);
    for (const auto& d : space.dimensions()) {
        if (d.kind == DimKind::Boolean || d.kind == DimKind::Categorical) continue;
        if (!point.dim_active(d))
            x.push_back(0.5);
        else
            x.push_back((point.get(d.name) - d.lo) / (d.hi - d.lo));
    }
    return x;
}

}  // namespace boir
