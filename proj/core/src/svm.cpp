#include "flowgraph/svm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <list>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "json.hpp"

#include "flowgraph/error.hpp"
#include "flowgraph/parallel.hpp"

namespace flowgraph {

double rbf(const double* x, const double* y, std::size_t dim, double gamma) {
    double d2 = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
        double d = x[k] - y[k];
        d2 += d * d;
    }
    return std::exp(-gamma * d2);
}

double rbf(const std::vector<double>& x, const std::vector<double>& y, double gamma) {
    if (x.size() != y.size()) throw Error("rbf dimension mismatch");
    return rbf(x.data(), y.data(), x.size(), gamma);
}

namespace {

// LRU cache of full kernel rows, bounded by a byte budget. At least two rows
// are kept so both working-set rows stay valid during an update.
class KernelCache {
public:
    KernelCache(const Matrix& x, double gamma, std::size_t budget_bytes, int workers)
        : x_(x), gamma_(gamma), workers_(workers) {
        std::size_t row_bytes = std::max<std::size_t>(1, x.rows * sizeof(double));
        max_rows_ = std::max<std::size_t>(2, budget_bytes / row_bytes);
    }

    const std::vector<double>& row(std::size_t k) {
        auto it = index_.find(k);
        if (it != index_.end()) {
            rows_.splice(rows_.begin(), rows_, it->second);
            return rows_.front().second;
        }
        rows_.emplace_front(k, std::vector<double>(x_.rows));
        auto& out = rows_.front().second;
        const double* xk = x_.row(k);
        parallel_for(x_.rows, workers_, [&](std::size_t begin, std::size_t end) {
            for (std::size_t l = begin; l < end; ++l)
                out[l] = rbf(xk, x_.row(l), x_.cols, gamma_);
        });
        index_[k] = rows_.begin();
        while (rows_.size() > max_rows_) {
            index_.erase(rows_.back().first);
            rows_.pop_back();
        }
        return out;
    }

private:
    const Matrix& x_;
    double gamma_;
    int workers_;
    std::size_t max_rows_;
    std::list<std::pair<std::size_t, std::vector<double>>> rows_;
    std::unordered_map<std::size_t, decltype(rows_)::iterator> index_;
};

}  // namespace

SvmModel train(const Matrix& x, const std::vector<int>& y, const TrainOptions& opts,
               TrainDiagnostics* diag) {
    auto n = x.rows;
    if (n == 0 || x.cols == 0) throw Error("empty training matrix");
    if (y.size() != n) throw Error("label/matrix size mismatch");
    if (!(opts.c > 0) || !(opts.gamma > 0)) throw Error("c and gamma must be positive");
    for (double v : x.data)
        if (!std::isfinite(v)) throw Error("non-finite feature value in training matrix");
    std::size_t pos = 0, neg = 0;
    for (int label : y) {
        if (label == 1) ++pos;
        else if (label == -1) ++neg;
        else throw Error("labels must be -1 or +1");
    }
    if (pos == 0 || neg == 0) throw Error("training data must contain both classes");

    const double c = opts.c;
    // G_k = y_k - u_k with u_k = sum_l alpha_l y_l K(l,k). KKT holds within
    // tol exactly when max over I_up of G <= min over I_low of G + tol.
    std::vector<double> alpha(n, 0.0);
    std::vector<double> grad(n);
    for (std::size_t k = 0; k < n; ++k) grad[k] = static_cast<double>(y[k]);

    KernelCache cache(x, opts.gamma, opts.cache_bytes, opts.workers);
    const double bound_snap = 1e-12 * std::max(1.0, c);
    // Stall backstop, not a work bound: large C on duplicate-heavy data needs a few
    // hundred thousand pair updates even at n ~ 100, so the budget is generous.
    const std::int64_t iter_cap =
        static_cast<std::int64_t>(opts.max_passes) * 1000 * static_cast<std::int64_t>(std::max<std::size_t>(n, 100));

    std::int64_t iters = 0;
    double bias = 0.0;
    double gap = 0.0;
    for (;;) {
        double up_max = -std::numeric_limits<double>::infinity();
        double low_min = std::numeric_limits<double>::infinity();
        std::ptrdiff_t i = -1, j = -1;
        for (std::size_t k = 0; k < n; ++k) {
            bool at_upper = alpha[k] >= c;
            bool at_lower = alpha[k] <= 0.0;
            bool in_up = y[k] == 1 ? !at_upper : !at_lower;
            bool in_low = y[k] == 1 ? !at_lower : !at_upper;
            if (in_up && grad[k] > up_max) {
                up_max = grad[k];
                i = static_cast<std::ptrdiff_t>(k);
            }
            if (in_low && grad[k] < low_min) {
                low_min = grad[k];
                j = static_cast<std::ptrdiff_t>(k);
            }
        }
        if (i < 0 || j < 0) {  // one side exhausted: optimal
            bias = i >= 0 ? up_max : (j >= 0 ? low_min : 0.0);
            gap = 0.0;
            break;
        }
        gap = up_max - low_min;
        if (gap <= opts.tol) {
            bias = (up_max + low_min) / 2.0;
            break;
        }
        if (++iters > iter_cap) throw Error("SMO did not converge within the iteration budget");

        auto iu = static_cast<std::size_t>(i);
        auto jl = static_cast<std::size_t>(j);
        const auto& ki = cache.row(iu);
        const auto& kj = cache.row(jl);
        double room_i = y[iu] == 1 ? c - alpha[iu] : alpha[iu];
        double room_j = y[jl] == 1 ? alpha[jl] : c - alpha[jl];
        double step = std::min(room_i, room_j);
        double eta = ki[iu] + kj[jl] - 2.0 * ki[jl];
        if (eta > 0.0) step = std::min(step, gap / eta);

        alpha[iu] += y[iu] * step;
        alpha[jl] -= y[jl] * step;
        for (auto* a : {&alpha[iu], &alpha[jl]}) {
            if (*a < bound_snap) *a = 0.0;
            if (*a > c - bound_snap) *a = c;
        }
        for (std::size_t k = 0; k < n; ++k) grad[k] += step * (kj[k] - ki[k]);
    }

    SvmModel m;
    m.gamma = opts.gamma;
    m.c = c;
    m.bias = bias;
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < n; ++k)
        if (alpha[k] > 1e-12) kept.push_back(k);
    m.support_vectors = Matrix(kept.size(), x.cols);
    m.dual_coefs.resize(kept.size());
    for (std::size_t r = 0; r < kept.size(); ++r) {
        const double* src = x.row(kept[r]);
        std::copy(src, src + x.cols, m.support_vectors.row(r));
        m.dual_coefs[r] = alpha[kept[r]] * static_cast<double>(y[kept[r]]);
    }
    if (diag) {
        diag->alpha = std::move(alpha);
        diag->bias = bias;
        diag->iterations = iters;
        diag->final_gap = gap;
    }
    return m;
}

double decision_value(const SvmModel& m, const double* row) {
    double sum = m.bias;
    for (std::size_t r = 0; r < m.support_vectors.rows; ++r)
        sum += m.dual_coefs[r] * rbf(m.support_vectors.row(r), row, m.support_vectors.cols, m.gamma);
    return sum;
}

std::vector<double> decision_values(const SvmModel& m, const Matrix& x) {
    if (x.cols != m.support_vectors.cols) throw Error("feature dimension mismatch");
    std::vector<double> out(x.rows);
    for (std::size_t r = 0; r < x.rows; ++r) out[r] = decision_value(m, x.row(r));
    return out;
}

int predict_one(const SvmModel& m, const double* row) {
    return decision_value(m, row) >= 0.0 ? 1 : -1;
}

std::vector<int> predict(const SvmModel& m, const Matrix& x) {
    auto values = decision_values(m, x);
    std::vector<int> labels(values.size());
    for (std::size_t r = 0; r < values.size(); ++r) labels[r] = values[r] >= 0.0 ? 1 : -1;
    return labels;
}

Matrix project_raw(const SvmModel& m, const Matrix& raw) {
    const Matrix* src = &raw;
    Matrix scaled;
    if (m.scaler.size() != 0) {
        scaled = apply_scaler(m.scaler, raw);
        src = &scaled;
    }
    if (m.feature_mask.empty()) return *src;
    Matrix out(src->rows, m.feature_mask.size());
    for (std::size_t r = 0; r < src->rows; ++r)
        for (std::size_t k = 0; k < m.feature_mask.size(); ++k) {
            if (m.feature_mask[k] >= src->cols) throw Error("feature mask out of range");
            out.at(r, k) = src->at(r, m.feature_mask[k]);
        }
    return out;
}

std::vector<double> decision_values_raw(const SvmModel& m, const Matrix& raw) {
    return decision_values(m, project_raw(m, raw));
}

std::vector<int> predict_raw(const SvmModel& m, const Matrix& raw) {
    return predict(m, project_raw(m, raw));
}

namespace {

using nlohmann::json;

json scaler_to_json(const Scaler& s) {
    return json{{"means", s.means},
                {"stds", s.stds},
                {"scaled", std::vector<int>(s.scaled.begin(), s.scaled.end())}};
}

Scaler scaler_from_json(const json& j) {
    Scaler s;
    s.means = j.at("means").get<std::vector<double>>();
    s.stds = j.at("stds").get<std::vector<double>>();
    auto flags = j.at("scaled").get<std::vector<int>>();
    s.scaled.assign(flags.begin(), flags.end());
    if (s.stds.size() != s.means.size() || s.scaled.size() != s.means.size())
        throw Error("inconsistent scaler arrays in model file");
    return s;
}

}  // namespace

std::string model_to_json(const SvmModel& m) {
    json j;
    j["format"] = "flowgraph-svm-model";
    j["version"] = 1;
    j["gamma"] = m.gamma;
    j["c"] = m.c;
    j["bias"] = m.bias;
    j["feature_mask"] = m.feature_mask;
    j["scaler"] = scaler_to_json(m.scaler);
    j["dual_coefs"] = m.dual_coefs;
    json svs = json::array();
    for (std::size_t r = 0; r < m.support_vectors.rows; ++r) {
        const double* row = m.support_vectors.row(r);
        svs.push_back(std::vector<double>(row, row + m.support_vectors.cols));
    }
    j["support_vectors"] = svs;
    j["sv_dim"] = m.support_vectors.cols;
    return j.dump(2);
}

SvmModel model_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("model file is not valid JSON: ") + e.what());
    }
    try {
        if (j.at("format") != "flowgraph-svm-model") throw Error("not a model file");
        SvmModel m;
        m.gamma = j.at("gamma").get<double>();
        m.c = j.at("c").get<double>();
        m.bias = j.at("bias").get<double>();
        m.feature_mask = j.at("feature_mask").get<std::vector<std::size_t>>();
        m.scaler = scaler_from_json(j.at("scaler"));
        m.dual_coefs = j.at("dual_coefs").get<std::vector<double>>();
        auto dim = j.at("sv_dim").get<std::size_t>();
        const auto& svs = j.at("support_vectors");
        m.support_vectors = Matrix(svs.size(), dim);
        for (std::size_t r = 0; r < svs.size(); ++r) {
            auto row = svs[r].get<std::vector<double>>();
            if (row.size() != dim) throw Error("ragged support vector rows in model file");
            std::copy(row.begin(), row.end(), m.support_vectors.row(r));
        }
        if (m.dual_coefs.size() != m.support_vectors.rows)
            throw Error("support vector / dual coefficient length mismatch");
        return m;
    } catch (const json::exception& e) {
        throw Error(std::string("malformed model file: ") + e.what());
    }
}

void save_model(const SvmModel& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << model_to_json(m) << '\n';
    if (!out) throw Error("write failed for " + path);
}

SvmModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return model_from_json(buf.str());
}

}  // namespace flowgraph
