#include "report_json.hpp"

namespace hypercurv::cli {

namespace {

nlohmann::json vector_json(const VectorXd& v) {
  auto arr = nlohmann::json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) arr.push_back(v(k));
  return arr;
}

VectorXd vector_from(const nlohmann::json& j) {
  const auto values = j.get<std::vector<double>>();
  return Eigen::Map<const VectorXd>(values.data(), Eigen::Index(values.size()));
}

}  // namespace

ReportFields schema_fields(const CurvatureReport& report) {
  return {report.point, report.normal, report.curvatures, report.gauss_kronecker, report.mean,
          report.weingarten};
}

nlohmann::json report_to_json(const CurvatureReport& report) { return report_to_json(schema_fields(report)); }

nlohmann::json report_to_json(const ReportFields& fields) {
  nlohmann::json j;
  j["point"] = vector_json(fields.point);
  j["normal"] = vector_json(fields.normal);
  auto curvatures = nlohmann::json::array();
  for (const auto& c : fields.curvatures)
    curvatures.push_back({{"value", c.value}, {"multiplicity", c.multiplicity}});
  j["curvatures"] = std::move(curvatures);
  j["gauss_kronecker"] = fields.gauss_kronecker;
  j["mean"] = fields.mean;
  auto rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < fields.weingarten.rows(); ++i)
    rows.push_back(vector_json(fields.weingarten.row(i).transpose()));
  j["weingarten"] = std::move(rows);
  return j;
}

ReportFields report_from_json(const nlohmann::json& j) {
  ReportFields out;
  out.point = vector_from(j.at("point"));
  out.normal = vector_from(j.at("normal"));
  for (const auto& c : j.at("curvatures"))
    out.curvatures.push_back({c.at("value").get<double>(), c.at("multiplicity").get<int>()});
  out.gauss_kronecker = j.at("gauss_kronecker").get<double>();
  out.mean = j.at("mean").get<double>();
  const auto& rows = j.at("weingarten");
  const auto dim = Eigen::Index(rows.size());
  out.weingarten.resize(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto row = rows.at(std::size_t(i)).get<std::vector<double>>();
    if (Eigen::Index(row.size()) != dim)
      throw InvalidArgument("report json: weingarten must be square");
    for (Eigen::Index k = 0; k < dim; ++k) out.weingarten(i, k) = row[std::size_t(k)];
  }
  return out;
}

nlohmann::json summary_to_json(const SLCurvatureSummary& s) {
  return {{"n", s.n},
          {"kappa_plus", s.kappa_plus},
          {"mult_plus", s.mult_plus},
          {"kappa_minus", s.kappa_minus},
          {"mult_minus", s.mult_minus},
          {"gauss_kronecker", s.gauss_kronecker},
          {"mean", s.mean}};
}

}  // namespace hypercurv::cli
