#pragma once

// JSON form of a CurvatureReport. Stable keys:
//   {"point": [...], "normal": [...],
//    "curvatures": [{"value": r, "multiplicity": k}, ...],
//    "gauss_kronecker": r, "mean": r, "weingarten": [[...], ...]}

#include <json.hpp>

#include "hypercurv/hypersurface.hpp"
#include "hypercurv/sl_theorem.hpp"

namespace hypercurv::cli {

/// Only the schema fields are meaningful after a round trip; the tangent
/// basis and the unclustered eigenvalues are not serialized.
struct ReportFields {
  VectorXd point;
  VectorXd normal;
  std::vector<Cluster<double>> curvatures;
  double gauss_kronecker = 0.0;
  double mean = 0.0;
  MatrixXd weingarten;

  bool operator==(const ReportFields& o) const {
    return point == o.point && normal == o.normal && curvatures == o.curvatures &&
           gauss_kronecker == o.gauss_kronecker && mean == o.mean &&
           weingarten.rows() == o.weingarten.rows() && weingarten.cols() == o.weingarten.cols() &&
           weingarten == o.weingarten;
  }
};

ReportFields schema_fields(const CurvatureReport& report);

nlohmann::json report_to_json(const CurvatureReport& report);
nlohmann::json report_to_json(const ReportFields& fields);

/// Throws nlohmann::json::exception on missing keys or wrong types and
/// InvalidArgument on a non-square weingarten.
ReportFields report_from_json(const nlohmann::json& j);

nlohmann::json summary_to_json(const SLCurvatureSummary& s);

}  // namespace hypercurv::cli
