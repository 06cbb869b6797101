#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "wellkit/bayes.hpp"
#include "wellkit/forest.hpp"
#include "wellkit/linear.hpp"
#include "wellkit/mlp.hpp"
#include "wellkit/ransac.hpp"
#include "wellkit/types.hpp"

namespace wellkit {

enum class ModelKind : int { Ols = 0, Brr, Ransac, Rf, Ann };

inline constexpr std::array<ModelKind, 5> kAllModels = {
    ModelKind::Ols, ModelKind::Brr, ModelKind::Ransac, ModelKind::Rf, ModelKind::Ann,
};

std::string_view model_name(ModelKind kind);
std::optional<ModelKind> model_from_name(std::string_view name);  // case-insensitive

/// Hyperparameters for all backends plus the enable list a benchmark run
/// instantiates. OLS has no tunables.
struct ModelConfigs {
  BrrConfig brr;
  RansacConfig ransac;
  ForestConfig rf;
  MlpConfig ann;
  std::vector<ModelKind> enabled{kAllModels.begin(), kAllModels.end()};

  bool is_enabled(ModelKind kind) const;
};

/// Uniform fit/predict contract over the five backends. predict before fit
/// throws NotFittedError; each backend rejects fits with too few rows.
class Regressor {
 public:
  virtual ~Regressor() = default;

  virtual ModelKind kind() const = 0;
  std::string_view name() const { return model_name(kind()); }

  virtual void fit(const Matrix& X, const Vector& y, std::uint64_t seed) = 0;
  virtual Vector predict(const Matrix& X) const = 0;
  virtual bool fitted() const = 0;

  /// Versioned text dump sufficient to reload and predict.
  virtual void save(std::ostream& out) const = 0;
};

std::unique_ptr<Regressor> make_regressor(ModelKind kind, const ModelConfigs& configs = {});

void save_model(const Regressor& model, std::ostream& out);
void save_model_file(const Regressor& model, const std::filesystem::path& path);
std::unique_ptr<Regressor> load_model(std::istream& in);
std::unique_ptr<Regressor> load_model_file(const std::filesystem::path& path);

}  // namespace wellkit
