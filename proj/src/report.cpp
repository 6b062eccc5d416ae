#include "nkc/report.hpp"

#include <json.hpp>

#include <sstream>

namespace nkc {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds:
      return "holds";
    case CheckStatus::fails:
      return "fails";
    case CheckStatus::not_applicable:
      return "not_applicable";
  }
  return "unknown";
}

Check& VerificationReport::add(Check c) {
  checks_.push_back(std::move(c));
  return checks_.back();
}

Check& VerificationReport::add(std::string name, CheckStatus status, std::optional<Witness> witness,
                               std::vector<std::string> notes) {
  return add(Check{std::move(name), status, std::move(witness), std::move(notes)});
}

void VerificationReport::add_value(std::string name, std::string value) {
  values_.emplace_back(std::move(name), std::move(value));
}

void VerificationReport::add_note(std::string note) {
  for (const auto& n : notes_) {
    if (n == note) return;
  }
  notes_.push_back(std::move(note));
}

void VerificationReport::append(const VerificationReport& other) {
  for (const auto& c : other.checks_) checks_.push_back(c);
  for (const auto& v : other.values_) values_.push_back(v);
  for (const auto& n : other.notes_) add_note(n);
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const std::string* VerificationReport::value(std::string_view name) const {
  for (const auto& [k, v] : values_) {
    if (k == name) return &v;
  }
  return nullptr;
}

std::size_t VerificationReport::fail_count() const {
  std::size_t n = 0;
  for (const auto& c : checks_) n += c.status == CheckStatus::fails ? 1 : 0;
  return n;
}

bool VerificationReport::all_hold() const {
  for (const auto& c : checks_) {
    if (c.status != CheckStatus::holds) return false;
  }
  return true;
}

namespace {

std::string emit_json(const VerificationReport& r) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["checks"] = ordered_json::array();
  for (const auto& c : r.checks()) {
    ordered_json entry;
    entry["name"] = c.name;
    entry["status"] = to_string(c.status);
    if (c.witness) {
      entry["witness"] = {{"indices", c.witness->indices}, {"residual", c.witness->residual}};
    } else {
      entry["witness"] = nullptr;
    }
    entry["convention_notes"] = c.convention_notes;
    doc["checks"].push_back(std::move(entry));
  }
  ordered_json values = ordered_json::object();
  for (const auto& [k, v] : r.values()) values[k] = v;
  doc["values"] = std::move(values);
  doc["notes"] = r.notes();
  doc["provenance"] = {{"manifest_hash", r.provenance.manifest_hash},
                       {"engine_version", r.provenance.engine_version}};
  return doc.dump(2) + "\n";
}

std::string emit_text(const VerificationReport& r) {
  std::ostringstream out;
  for (const auto& n : r.notes()) out << "# " << n << "\n";
  for (const auto& c : r.checks()) {
    out << "[" << to_string(c.status) << "] " << c.name;
    if (c.witness) {
      out << "  at (";
      for (std::size_t i = 0; i < c.witness->indices.size(); ++i) {
        out << (i ? "," : "") << c.witness->indices[i];
      }
      out << "): " << c.witness->residual;
    }
    out << "\n";
    for (const auto& note : c.convention_notes) out << "    note: " << note << "\n";
  }
  for (const auto& [k, v] : r.values()) out << k << " = " << v << "\n";
  out << "provenance: manifest " << r.provenance.manifest_hash << ", engine " << r.provenance.engine_version << "\n";
  return out.str();
}

template <class T, class Fn>
Check scan(std::string name, std::size_t dim, std::size_t arity, const Fn& residual) {
  std::vector<std::size_t> idx(arity, 0);
  Check out{std::move(name), CheckStatus::holds, std::nullopt, {}};
  if (dim == 0) return out;
  while (true) {
    T r = residual(std::span<const std::size_t>(idx));
    if (!is_zero(r)) {
      out.status = CheckStatus::fails;
      out.witness = Witness{one_based(idx), r.str()};
      return out;
    }
    std::size_t pos = arity;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < dim) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
    if (arity == 0) return out;
  }
}

}  // namespace

std::string emit(const VerificationReport& report, Format format) {
  return format == Format::json ? emit_json(report) : emit_text(report);
}

std::vector<int> one_based(std::span<const std::size_t> idx) {
  std::vector<int> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(static_cast<int>(i) + 1);
  return out;
}

Check scan_vectors(std::string name, std::size_t dim, std::size_t arity,
                   const std::function<FrameVector(std::span<const std::size_t>)>& residual) {
  return scan<FrameVector>(std::move(name), dim, arity, residual);
}

Check scan_scalars(std::string name, std::size_t dim, std::size_t arity,
                   const std::function<Scalar(std::span<const std::size_t>)>& residual) {
  return scan<Scalar>(std::move(name), dim, arity, residual);
}

}  // namespace nkc
