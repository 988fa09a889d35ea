#include "vpwave/coeff_file.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <iterator>
#include <system_error>

#include "json.hpp"

namespace vpwave {

using nlohmann::json;

namespace {

json encode_array(const std::vector<double>& v, const WriteOptions& opts) {
  json arr = json::array();
  for (double x : v) {
    if (opts.decimal) {
      arr.push_back(x);
    } else {
      arr.push_back(hex_float(x));
    }
  }
  return arr;
}

std::vector<double> decode_array(const json& arr, const std::string& where) {
  if (!arr.is_array()) throw SchemaError(where + ": expected an array");
  std::vector<double> out;
  out.reserve(arr.size());
  for (const auto& item : arr) {
    double v = 0.0;
    if (item.is_number()) {
      v = item.get<double>();
    } else if (item.is_string()) {
      try {
        v = parse_hex_float(item.get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw SchemaError(where + ": " + e.what());
      }
    } else {
      throw SchemaError(where + ": array entries must be numbers or hex-float strings");
    }
    if (!std::isfinite(v)) throw SchemaError(where + ": non-finite value");
    out.push_back(v);
  }
  return out;
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(where + ": missing field '" + key + "'");
  return *it;
}

int require_int(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number_integer()) throw SchemaError(where + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

std::string hex_float(double v) {
  std::array<char, 64> buf{};
  const bool neg = std::signbit(v);
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), std::abs(v), std::chars_format::hex);
  return std::string(neg ? "-0x" : "0x") + std::string(buf.data(), ptr);
}

double parse_hex_float(const std::string& s) {
  std::string_view body(s);
  bool neg = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.size() < 3 || body[0] != '0' || (body[1] != 'x' && body[1] != 'X')) {
    throw std::invalid_argument("malformed hex float '" + s + "'");
  }
  body.remove_prefix(2);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v, std::chars_format::hex);
  if (ec != std::errc{} || ptr != body.data() + body.size()) {
    throw std::invalid_argument("malformed hex float '" + s + "'");
  }
  return neg ? -v : v;
}

CoeffFile CoeffFile::from_samples(std::vector<double> samples, int n0) {
  CoeffFile f;
  f.kind = FileKind::samples;
  f.n0 = n0;
  f.coarse_n = static_cast<int>(samples.size());
  f.coarse = std::move(samples);
  return f;
}

CoeffFile CoeffFile::from_pyramid(const Pyramid& p) {
  p.validate();
  CoeffFile f;
  f.kind = FileKind::pyramid;
  f.n0 = p.n0;
  f.levels = p.levels;
  f.coarse_n = p.n0;
  f.coarse_m = p.levels.front().m;
  f.coarse = p.coarse;
  return f;
}

Pyramid CoeffFile::to_pyramid() const {
  if (kind != FileKind::pyramid) throw SchemaError("expected a pyramid file, got samples");
  validate();
  return Pyramid{n0, levels, coarse};
}

void CoeffFile::validate() const {
  if (n0 < 1) throw SchemaError("n0 must be positive");
  if (static_cast<int>(coarse.size()) != coarse_n) {
    throw SchemaError("coarse.a has " + std::to_string(coarse.size()) + " entries, expected " +
                      std::to_string(coarse_n));
  }
  for (double v : coarse) {
    if (!std::isfinite(v)) throw SchemaError("non-finite coefficient");
  }
  if (kind == FileKind::samples) {
    if (!levels.empty()) throw SchemaError("samples file must not carry levels");
    try {
      count_levels(coarse_n, n0);
    } catch (const std::invalid_argument& e) {
      throw SchemaError(e.what());
    }
    return;
  }
  if (coarse_n != n0) throw SchemaError("coarse.n must equal n0");
  try {
    Pyramid{n0, levels, coarse}.validate();
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  if (coarse_m && *coarse_m != levels.front().m) {
    throw SchemaError("coarse.m must equal the m of the coarsest level");
  }
  if (meta.theta) {
    for (const auto& lv : levels) {
      if (lv.m != m_from_theta(*meta.theta, lv.n)) {
        throw SchemaError("level n=" + std::to_string(lv.n) + " records m=" + std::to_string(lv.m) +
                          " but theta=" + std::to_string(*meta.theta) + " gives m=" +
                          std::to_string(m_from_theta(*meta.theta, lv.n)));
      }
    }
  }
}

std::string serialize(const CoeffFile& f, const WriteOptions& opts) {
  json doc;
  doc["schema"] = CoeffFile::kSchema;
  doc["kind"] = f.kind == FileKind::samples ? "samples" : "pyramid";
  doc["n0"] = f.n0;
  json levels = json::array();
  for (const auto& lv : f.levels) {
    levels.push_back({{"n", lv.n}, {"m", lv.m}, {"b", encode_array(lv.details, opts)}});
  }
  doc["levels"] = std::move(levels);
  json coarse = {{"n", f.coarse_n}};
  if (f.coarse_m) coarse["m"] = *f.coarse_m;
  coarse["a"] = encode_array(f.coarse, opts);
  doc["coarse"] = std::move(coarse);
  json meta = json::object();
  if (f.meta.theta) meta["theta"] = *f.meta.theta;
  if (f.meta.source_expr) meta["sourceExpr"] = *f.meta.source_expr;
  if (f.meta.tau) meta["tau"] = *f.meta.tau;
  if (f.meta.created) meta["created"] = *f.meta.created;
  doc["metadata"] = std::move(meta);
  return doc.dump(1) + "\n";
}

CoeffFile parse_coeff_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("document must be a JSON object");
  const int schema = require_int(doc, "schema", "document");
  if (schema != CoeffFile::kSchema) throw SchemaError("unsupported schema version " + std::to_string(schema));

  CoeffFile f;
  const json& kind = require(doc, "kind", "document");
  if (kind == "samples") {
    f.kind = FileKind::samples;
  } else if (kind == "pyramid") {
    f.kind = FileKind::pyramid;
  } else {
    throw SchemaError("kind must be \"samples\" or \"pyramid\"");
  }
  f.n0 = require_int(doc, "n0", "document");

  const json& levels = require(doc, "levels", "document");
  if (!levels.is_array()) throw SchemaError("levels must be an array");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const std::string where = "levels[" + std::to_string(i) + "]";
    const json& lv = levels[i];
    if (!lv.is_object()) throw SchemaError(where + ": expected an object");
    f.levels.push_back(PyramidLevel{require_int(lv, "n", where), require_int(lv, "m", where),
                                    decode_array(require(lv, "b", where), where + ".b")});
  }

  const json& coarse = require(doc, "coarse", "document");
  if (!coarse.is_object()) throw SchemaError("coarse must be an object");
  f.coarse_n = require_int(coarse, "n", "coarse");
  if (coarse.contains("m")) f.coarse_m = require_int(coarse, "m", "coarse");
  f.coarse = decode_array(require(coarse, "a", "coarse"), "coarse.a");

  if (auto it = doc.find("metadata"); it != doc.end()) {
    const json& meta = *it;
    if (!meta.is_object()) throw SchemaError("metadata must be an object");
    auto number = [&](const char* key) -> std::optional<double> {
      auto m = meta.find(key);
      if (m == meta.end()) return std::nullopt;
      if (!m->is_number()) throw SchemaError(std::string("metadata.") + key + " must be a number");
      return m->get<double>();
    };
    auto text_field = [&](const char* key) -> std::optional<std::string> {
      auto m = meta.find(key);
      if (m == meta.end()) return std::nullopt;
      if (!m->is_string()) throw SchemaError(std::string("metadata.") + key + " must be a string");
      return m->get<std::string>();
    };
    f.meta.theta = number("theta");
    f.meta.tau = number("tau");
    f.meta.source_expr = text_field("sourceExpr");
    f.meta.created = text_field("created");
    if (f.meta.theta && !(*f.meta.theta > 0.0 && *f.meta.theta < 1.0)) {
      throw SchemaError("metadata.theta must lie in (0, 1)");
    }
  }
  f.validate();
  return f;
}

CoeffFile read_coeff_file(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_coeff_file(text);
}

}  // namespace vpwave
