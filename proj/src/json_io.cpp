#include "bott/json_io.hpp"

#include "bott/error.hpp"

namespace bott::json {
namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw InputError("field '" + field + "': " + what);
}

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where.empty() ? "<root>" : where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

Coeff as_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected an integer, got " + j.dump());
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    fail(field, "integer out of 64-bit range");
  return j.get<Coeff>();
}

int as_small_int(const json& j, const std::string& field) {
  const Coeff v = as_int(j, field);
  if (v < INT32_MIN || v > INT32_MAX) fail(field, "integer out of range");
  return static_cast<int>(v);
}

const json& as_array(const json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array");
  return j;
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

json from_matrix(const BottMatrix& m) {
  json upper = json::array();
  for (const auto& e : m.nonzero_entries()) upper.push_back({e.i, e.j, e.value});
  return {{"n", m.n()}, {"upper", std::move(upper)}};
}

BottMatrix to_matrix(const json& j) {
  const int n = as_small_int(require(j, "n", ""), "n");
  std::vector<UpperEntry> entries;
  if (j.contains("upper")) {
    const json& upper = as_array(j.at("upper"), "upper");
    for (std::size_t k = 0; k < upper.size(); ++k) {
      const std::string field = "upper[" + std::to_string(k) + "]";
      const json& e = upper[k];
      if (!e.is_array() || e.size() != 3) fail(field, "expected [i, j, value]");
      entries.push_back({as_small_int(e[0], field + "[0]"), as_small_int(e[1], field + "[1]"), as_int(e[2], field + "[2]")});
    }
  }
  try {
    return BottMatrix(n, entries);
  } catch (const InputError& e) {
    throw InputError(std::string("field 'upper': ") + e.what());
  }
}

json from_class(const CohomologyClass& c) {
  json terms = json::array();
  for (const auto& [m, coeff] : c.terms()) terms.push_back({{"mono", m.indices()}, {"coeff", coeff}});
  return {{"terms", std::move(terms)}};
}

CohomologyClass to_class(const json& j) {
  const json& terms = as_array(require(j, "terms", ""), "terms");
  CohomologyClass c;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string field = "terms[" + std::to_string(k) + "]";
    const json& mono = as_array(require(terms[k], "mono", field), field + ".mono");
    std::vector<int> idx;
    for (std::size_t p = 0; p < mono.size(); ++p) {
      idx.push_back(as_small_int(mono[p], field + ".mono[" + std::to_string(p) + "]"));
      if (p > 0 && idx[p] <= idx[p - 1]) fail(field + ".mono", "indices must be strictly increasing");
    }
    Monomial m;
    try {
      m = Monomial::from_indices(idx);
    } catch (const InputError& e) {
      fail(field + ".mono", e.what());
    }
    c.add_term(m, as_int(require(terms[k], "coeff", field), field + ".coeff"));
  }
  return c;
}

json from_partition(const Partition& p) { return {{"n", p.n()}, {"parts", p.parts()}}; }

Partition to_partition(const json& j) {
  const json& parts = as_array(require(j, "parts", ""), "parts");
  std::vector<int> v;
  for (std::size_t k = 0; k < parts.size(); ++k) v.push_back(as_small_int(parts[k], "parts[" + std::to_string(k) + "]"));
  Partition p = [&] {
    try {
      return Partition(v);
    } catch (const InputError& e) {
      fail("parts", e.what());
    }
  }();
  if (j.contains("n") && as_small_int(j.at("n"), "n") != p.n()) fail("n", "does not equal the sum of the parts");
  return p;
}

json from_report(const ClassificationReport& r) {
  return {{"q_trivial", r.q_trivial},
          {"square_zero_count", r.square_zero_count},
          {"partition", r.partition ? from_partition(*r.partition) : json(nullptr)}};
}

json from_int_matrix(const IntMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.n(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.n(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix to_int_matrix(const json& j, const std::string& field) {
  const json& rows = as_array(j, field);
  const int n = static_cast<int>(rows.size());
  std::vector<Coeff> data;
  for (int r = 0; r < n; ++r) {
    const std::string rf = field + "[" + std::to_string(r) + "]";
    const json& row = as_array(rows[r], rf);
    if (static_cast<int>(row.size()) != n) fail(rf, "expected " + std::to_string(n) + " entries");
    for (int c = 0; c < n; ++c) data.push_back(as_int(row[c], rf + "[" + std::to_string(c) + "]"));
  }
  return IntMatrix(n, std::move(data));
}

json from_aut(const AutElement& a) {
  return {{"n", a.n}, {"perm", a.perm}, {"signs", a.signs}, {"matrix", from_int_matrix(a.matrix)}};
}

AutElement to_aut(const json& j) {
  const int n = as_small_int(require(j, "n", ""), "n");
  auto read_list = [&](const char* key) {
    const json& arr = as_array(require(j, key, ""), key);
    std::vector<int> out;
    for (std::size_t k = 0; k < arr.size(); ++k)
      out.push_back(as_small_int(arr[k], std::string(key) + "[" + std::to_string(k) + "]"));
    return out;
  };
  AutElement a = signed_perm_to_matrix(n, read_list("perm"), read_list("signs"));
  if (j.contains("matrix") && to_int_matrix(j.at("matrix"), "matrix") != a.matrix)
    fail("matrix", "does not match the signed permutation");
  return a;
}

json from_block_aut(const BlockAutElement& a) {
  json factors = json::array();
  for (const auto& f : a.factors) factors.push_back(from_aut(f));
  return {{"partition", from_partition(a.partition)},
          {"factors", std::move(factors)},
          {"block_perm", a.block_perm},
          {"matrix", from_int_matrix(a.flatten())}};
}

}  // namespace bott::json
