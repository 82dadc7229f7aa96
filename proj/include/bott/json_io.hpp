#pragma once

#include <string>

#include "json.hpp"

#include "bott/autgroup.hpp"
#include "bott/bott_matrix.hpp"
#include "bott/classify.hpp"
#include "bott/cohomology_class.hpp"
#include "bott/oracle.hpp"
#include "bott/partition.hpp"

namespace bott::json {

using nlohmann::json;

// Parsers throw InputError naming the offending field. Writers emit the
// canonical form, so write(read(s)) == s for canonical documents.

/// {"n": <int>, "upper": [[i, j, A_ij], ...]}; only nonzero entries are
/// written, in row-major order.
json from_matrix(const BottMatrix& m);
BottMatrix to_matrix(const json& j);

/// {"terms": [{"mono": [sorted indices], "coeff": <int>}, ...]} in term order.
json from_class(const CohomologyClass& c);
CohomologyClass to_class(const json& j);

/// {"n": <int>, "parts": [<int desc>]}
json from_partition(const Partition& p);
Partition to_partition(const json& j);

/// {"q_trivial": bool, "square_zero_count": int, "partition": <Partition or null>}
json from_report(const ClassificationReport& r);

/// {"n", "perm", "signs", "matrix"}; matrix rows are row-major, column j of
/// the matrix is the image of x_j.
json from_aut(const AutElement& a);
AutElement to_aut(const json& j);

json from_block_aut(const BlockAutElement& a);

json from_int_matrix(const IntMatrix& m);
IntMatrix to_int_matrix(const json& j, const std::string& field);

/// Parse text as JSON, mapping syntax errors to InputError.
json parse(const std::string& text);

}  // namespace bott::json
