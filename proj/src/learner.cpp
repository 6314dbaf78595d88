#include "lsade/learner.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lsade/folds.hpp"
#include "lsade/stats.hpp"

namespace lsade {

namespace {

constexpr double kTinySd = 1e-12;

// One monomial: x_j^pj or x_j^pj * x_k^pk.
struct PolyTerm {
  int j;
  int pj;
  int k;   // -1 for pure powers
  int pk;  // 0 for pure powers
};

std::vector<PolyTerm> make_terms(int n_features, int degree,
                                 int interaction_order) {
  std::vector<PolyTerm> terms;
  for (int j = 0; j < n_features; ++j)
    for (int d = 1; d <= degree; ++d) terms.push_back({j, d, -1, 0});
  if (interaction_order >= 2) {
    for (int j = 0; j < n_features; ++j)
      for (int k = j + 1; k < n_features; ++k)
        for (int pj = 1; pj < degree; ++pj)
          for (int pk = 1; pj + pk <= degree; ++pk)
            terms.push_back({j, pj, k, pk});
  }
  return terms;
}

double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

Eigen::MatrixXd expand_basis(const Eigen::MatrixXd& xs,
                             const std::vector<PolyTerm>& terms) {
  Eigen::MatrixXd b(xs.rows(), static_cast<Eigen::Index>(terms.size()));
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& tm = terms[t];
    for (Eigen::Index i = 0; i < xs.rows(); ++i) {
      double val = ipow(xs(i, tm.j), tm.pj);
      if (tm.k >= 0) val *= ipow(xs(i, tm.k), tm.pk);
      b(i, static_cast<Eigen::Index>(t)) = val;
    }
  }
  return b;
}

struct Standardizer {
  Eigen::VectorXd mean;
  Eigen::VectorXd scale;

  Eigen::MatrixXd apply(const Eigen::Ref<const Eigen::MatrixXd>& x) const {
    return (x.rowwise() - mean.transpose()).array().rowwise() /
           scale.transpose().array();
  }
};

Standardizer weighted_standardizer(const Eigen::MatrixXd& x,
                                   const Eigen::VectorXd& w) {
  Standardizer s;
  const Eigen::Index p = x.cols();
  s.mean.resize(p);
  s.scale.resize(p);
  for (Eigen::Index j = 0; j < p; ++j) {
    s.mean(j) = weighted_mean(x.col(j), w);
    const double sd = std::sqrt(weighted_variance(x.col(j), w));
    s.scale(j) = sd > kTinySd ? sd : 1.0;
  }
  return s;
}

// Penalty-independent pieces of a weighted ridge solve. The SVD route keeps
// the solution finite for any singular or ill-conditioned basis; shrinkage
// s/(s^2 + penalty) is the penalty escalation the contract asks for.
struct RidgeWork {
  Standardizer feat;
  Standardizer basis;  // centers/scales of expanded basis columns
  double v_mean = 0.0;
  Eigen::MatrixXd v_sv;         // V
  Eigen::VectorXd sv;           // singular values
  Eigen::VectorXd uty;          // U^T (sqrt(w) (v - v_mean))
};

RidgeWork ridge_prepare(const Eigen::MatrixXd& x, const Eigen::VectorXd& v,
                        const Eigen::VectorXd& w,
                        const std::vector<PolyTerm>& terms) {
  RidgeWork work;
  work.feat = weighted_standardizer(x, w);
  Eigen::MatrixXd basis = expand_basis(work.feat.apply(x), terms);
  work.basis = weighted_standardizer(basis, w);
  basis = work.basis.apply(basis);
  work.v_mean = weighted_mean(v, w);

  const Eigen::ArrayXd sw = w.array().sqrt();
  basis.array().colwise() *= sw;
  const Eigen::VectorXd vw = sw * (v.array() - work.v_mean);

  Eigen::BDCSVD<Eigen::MatrixXd> svd(basis,
                                     Eigen::ComputeThinU | Eigen::ComputeThinV);
  work.v_sv = svd.matrixV();
  work.sv = svd.singularValues();
  work.uty = svd.matrixU().transpose() * vw;
  return work;
}

Eigen::VectorXd ridge_coef(const RidgeWork& work, double penalty) {
  const Eigen::ArrayXd shrink =
      work.sv.array() / (work.sv.array().square() + penalty);
  return work.v_sv * (shrink * work.uty.array()).matrix();
}

class PolyRidgeModel final : public Model {
 public:
  PolyRidgeModel(std::vector<PolyTerm> terms, Standardizer feat,
                 Standardizer basis, Eigen::VectorXd coef, double intercept,
                 double penalty, Eigen::Index dim)
      : terms_(std::move(terms)),
        feat_(std::move(feat)),
        basis_(std::move(basis)),
        coef_(std::move(coef)),
        intercept_(intercept),
        penalty_(penalty),
        dim_(dim) {}

  Eigen::VectorXd predict_impl(
      const Eigen::Ref<const Eigen::MatrixXd>& x) const override {
    const Eigen::MatrixXd basis =
        basis_.apply(expand_basis(feat_.apply(x), terms_));
    return (basis * coef_).array() + intercept_;
  }

  Eigen::Index input_dim() const override { return dim_; }
  double penalty() const { return penalty_; }

 private:
  std::vector<PolyTerm> terms_;
  Standardizer feat_;
  Standardizer basis_;
  Eigen::VectorXd coef_;
  double intercept_;
  double penalty_;
  Eigen::Index dim_;
};

FittedModel fit_poly_ridge(const LearnerSpec& spec, const Eigen::MatrixXd& x,
                           const Eigen::VectorXd& v,
                           const Eigen::VectorXd& w) {
  const auto terms = make_terms(static_cast<int>(x.cols()), spec.degree,
                                spec.interaction_order);

  std::vector<double> grid = spec.penalty_grid;
  std::sort(grid.begin(), grid.end());

  double chosen = grid.front();
  if (grid.size() > 1) {
    const int n_folds =
        std::max(2, std::min<int>(spec.cv_folds, static_cast<int>(x.rows())));
    const FoldAssignment cv = make_folds(x.rows(), n_folds, spec.seed);
    std::vector<double> cv_err(grid.size(), 0.0);
    for (int f = 0; f < cv.K(); ++f) {
      const auto train = cv.rows_not_in(f);
      const auto val = cv.rows_in(f);
      const Eigen::MatrixXd xt = x(train, Eigen::all);
      const RidgeWork work =
          ridge_prepare(xt, v(train), w(train), terms);
      const Eigen::MatrixXd basis_val =
          work.basis.apply(expand_basis(work.feat.apply(x(val, Eigen::all)),
                                        terms));
      for (std::size_t g = 0; g < grid.size(); ++g) {
        const Eigen::VectorXd pred =
            (basis_val * ridge_coef(work, grid[g])).array() + work.v_mean;
        cv_err[g] +=
            pairwise_sum(w(val).array() * (v(val) - pred).array().square());
      }
    }
    double best = cv_err[0];
    for (std::size_t g = 0; g < grid.size(); ++g) {
      if (cv_err[g] <= best) {  // ties go to the larger penalty
        best = cv_err[g];
        chosen = grid[g];
      }
    }
  }

  RidgeWork work = ridge_prepare(x, v, w, terms);
  Eigen::VectorXd coef = ridge_coef(work, chosen);
  return std::make_shared<PolyRidgeModel>(terms, std::move(work.feat),
                                          std::move(work.basis),
                                          std::move(coef), work.v_mean, chosen,
                                          x.cols());
}

class KernelModel final : public Model {
 public:
  KernelModel(Eigen::MatrixXd x, Eigen::VectorXd v, Eigen::VectorXd w,
              Eigen::VectorXd bandwidth)
      : x_(std::move(x)),
        v_(std::move(v)),
        w_(std::move(w)),
        h_(std::move(bandwidth)),
        fallback_(weighted_mean(v_, w_)) {}

  Eigen::VectorXd predict_impl(
      const Eigen::Ref<const Eigen::MatrixXd>& x) const override {
    Eigen::VectorXd out(x.rows());
    for (Eigen::Index q = 0; q < x.rows(); ++q) {
      double num = 0.0, den = 0.0;
      for (Eigen::Index i = 0; i < x_.rows(); ++i) {
        const double d2 =
            ((x.row(q) - x_.row(i)).transpose().array() / h_.array())
                .square()
                .sum();
        const double kern = w_(i) * std::exp(-0.5 * d2);
        num += kern * v_(i);
        den += kern;
      }
      out(q) = den > 1e-300 ? num / den : fallback_;
    }
    return out;
  }

  Eigen::Index input_dim() const override { return x_.cols(); }

 private:
  Eigen::MatrixXd x_;
  Eigen::VectorXd v_;
  Eigen::VectorXd w_;
  Eigen::VectorXd h_;
  double fallback_;
};

FittedModel fit_kernel(const LearnerSpec& spec, const Eigen::MatrixXd& x,
                       const Eigen::VectorXd& v, const Eigen::VectorXd& w) {
  const Eigen::Index p = x.cols();
  Eigen::VectorXd h(p);
  if (spec.bandwidth) {
    if (*spec.bandwidth <= 0.0)
      throw std::invalid_argument("fit: bandwidth must be > 0");
    h.setConstant(*spec.bandwidth);
  } else {
    // Scott-style rule of thumb per dimension.
    const double rate =
        std::pow(static_cast<double>(x.rows()), -1.0 / (p + 4.0)) *
        std::pow(4.0 / (p + 2.0), 1.0 / (p + 4.0));
    for (Eigen::Index j = 0; j < p; ++j) {
      const double sd = std::sqrt(weighted_variance(x.col(j), w));
      h(j) = sd > kTinySd ? sd * rate : 1.0;
    }
  }
  return std::make_shared<KernelModel>(x, v, w, std::move(h));
}

class OracleModel final : public Model {
 public:
  OracleModel(std::function<double(const Eigen::VectorXd&)> fn,
              Eigen::Index dim)
      : fn_(std::move(fn)), dim_(dim) {}

  Eigen::VectorXd predict_impl(
      const Eigen::Ref<const Eigen::MatrixXd>& x) const override {
    Eigen::VectorXd out(x.rows());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      out(i) = fn_(x.row(i).transpose());
    return out;
  }

  Eigen::Index input_dim() const override { return dim_; }

 private:
  std::function<double(const Eigen::VectorXd&)> fn_;
  Eigen::Index dim_;
};

void validate_spec(const LearnerSpec& spec) {
  if (spec.kind == LearnerKind::PolyRidge) {
    if (spec.degree < 1)
      throw std::invalid_argument("fit: degree must be >= 1");
    if (spec.interaction_order < 1 || spec.interaction_order > 2)
      throw std::invalid_argument("fit: interaction_order must be 1 or 2");
    if (spec.penalty_grid.empty())
      throw std::invalid_argument("fit: penalty_grid must be non-empty");
    for (double g : spec.penalty_grid)
      if (!(g > 0.0))
        throw std::invalid_argument("fit: penalties must be > 0");
    if (spec.cv_folds < 2)
      throw std::invalid_argument("fit: cv_folds must be >= 2");
  }
  if (spec.kind == LearnerKind::Oracle && !spec.oracle_fn)
    throw std::invalid_argument("fit: Oracle learner needs oracle_fn");
}

}  // namespace

std::string to_string(LearnerKind k) {
  switch (k) {
    case LearnerKind::PolyRidge: return "poly_ridge";
    case LearnerKind::KernelSmoother: return "kernel";
    case LearnerKind::Oracle: return "oracle";
  }
  return "?";
}

std::optional<LearnerKind> learner_kind_from_string(const std::string& s) {
  if (s == "poly_ridge" || s == "poly") return LearnerKind::PolyRidge;
  if (s == "kernel" || s == "kernel_smoother") return LearnerKind::KernelSmoother;
  if (s == "oracle") return LearnerKind::Oracle;
  return std::nullopt;
}

std::vector<double> default_penalty_grid() {
  std::vector<double> grid(13);
  for (int i = 0; i < 13; ++i)
    grid[static_cast<std::size_t>(i)] = std::pow(10.0, -6.0 + 8.0 * i / 12.0);
  return grid;
}

FittedModel fit(const LearnerSpec& spec,
                const Eigen::Ref<const Eigen::MatrixXd>& x,
                const Eigen::Ref<const Eigen::VectorXd>& v,
                const std::optional<Eigen::VectorXd>& weights) {
  validate_spec(spec);
  if (x.rows() < 2) throw std::invalid_argument("fit: need at least 2 rows");
  if (v.size() != x.rows())
    throw std::invalid_argument("fit: response length mismatch");
  if (!x.allFinite() || !v.allFinite())
    throw std::invalid_argument("fit: non-finite training data");

  Eigen::VectorXd w;
  if (weights) {
    if (weights->size() != x.rows())
      throw std::invalid_argument("fit: weight length mismatch");
    if (!weights->allFinite() || (weights->array() < 0.0).any())
      throw std::invalid_argument("fit: weights must be finite and >= 0");
    const double total = pairwise_sum(*weights);
    if (total <= 0.0)
      throw std::invalid_argument("fit: weights must not all be zero");
    w = *weights * (static_cast<double>(x.rows()) / total);
  } else {
    w = Eigen::VectorXd::Ones(x.rows());
  }

  switch (spec.kind) {
    case LearnerKind::PolyRidge:
      return fit_poly_ridge(spec, x, v, w);
    case LearnerKind::KernelSmoother:
      return fit_kernel(spec, x, v, w);
    case LearnerKind::Oracle:
      return std::make_shared<OracleModel>(spec.oracle_fn, x.cols());
  }
  throw std::logic_error("fit: unknown learner kind");
}

Eigen::VectorXd predict(const FittedModel& model,
                        const Eigen::Ref<const Eigen::MatrixXd>& x_new) {
  if (!model) throw std::invalid_argument("predict: null model");
  if (x_new.cols() != model->input_dim())
    throw std::invalid_argument("predict: column count differs from training");
  return model->predict_impl(x_new);
}

}  // namespace lsade
