#include "trajaug/csv.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <unordered_map>

#include "trajaug/error.hpp"
#include "trajaug/modification.hpp"

namespace trajaug {
namespace {

std::optional<Degrees> parse_degrees(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  Degrees value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

struct RawTrajectory {
  Trajectory traj;
  std::size_t first_row = 0;
};

// Sort key that puts "{id}#aug{k}" right after "{id}", copies by numeric k.
struct OutputKey {
  std::string_view root;
  std::vector<std::uint64_t> copies;

  explicit OutputKey(std::string_view id) {
    while (auto parts = parse_synthetic_id(id)) {
      copies.push_back(parts->copy_index);
      id = parts->original_id;
    }
    std::reverse(copies.begin(), copies.end());
    root = id;
  }

  friend bool operator<(const OutputKey& a, const OutputKey& b) {
    if (a.root != b.root) return a.root < b.root;
    return a.copies < b.copies;
  }
};

}  // namespace

bool read_csv_record(std::istream& in, std::vector<std::string>& fields) {
  fields.clear();
  if (in.peek() == std::char_traits<char>::eof()) return false;

  std::string field;
  bool quoted = false;
  bool any = false;
  char c = 0;
  while (in.get(c)) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      break;
    } else if (c == '\r') {
      if (in.peek() == '\n') in.get(c);
      break;
    } else {
      field += c;
    }
  }
  if (!any) return false;
  fields.push_back(std::move(field));
  return true;
}

std::string escape_csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

TrajectoryDataset read_trajectories_csv(std::istream& in,
                                        const std::optional<std::string>& label_column) {
  std::vector<std::string> header;
  if (!read_csv_record(in, header)) throw Error(ErrorCode::ParseError, "empty input: header row required");
  // Strip a UTF-8 byte-order mark.
  if (header.front().starts_with("\xEF\xBB\xBF")) header.front().erase(0, 3);

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (!index.emplace(header[i], i).second) {
      throw Error(ErrorCode::ParseError, fmt::format("row 1: duplicate column '{}'", header[i]));
    }
  }
  auto require = [&](std::string_view name) {
    auto it = index.find(std::string(name));
    if (it == index.end()) throw Error(ErrorCode::MissingColumn, std::string(name));
    return it->second;
  };
  const std::size_t id_col = require("traj_id");
  const std::size_t time_col = require("DateTime");
  const std::size_t lat_col = require("lat");
  const std::size_t lon_col = require("lon");
  std::optional<std::size_t> label_col;
  if (label_column) {
    if (is_reserved_column(*label_column)) {
      throw Error(ErrorCode::ReservedColumn,
                  fmt::format("'{}' cannot be used as the label column", *label_column));
    }
    label_col = require(*label_column);
  }

  std::vector<std::size_t> extra_cols;
  std::vector<std::string> extra_names;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i == id_col || i == time_col || i == lat_col || i == lon_col || i == label_col) continue;
    extra_cols.push_back(i);
    extra_names.push_back(header[i]);
  }

  std::map<std::string, RawTrajectory, std::less<>> grouped;
  std::vector<std::string> fields;
  std::size_t row = 1;
  while (read_csv_record(in, fields)) {
    ++row;
    if (fields.size() == 1 && fields.front().empty()) continue;  // blank line
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::ParseError,
                  fmt::format("row {}: expected {} fields, found {}", row, header.size(), fields.size()));
    }
    TrajectoryPoint point;
    auto time = Timestamp::parse(fields[time_col]);
    if (!time) throw Error(ErrorCode::ParseError, fmt::format("row {}, column DateTime", row));
    point.time = *time;
    auto lat = parse_degrees(fields[lat_col]);
    if (!lat) throw Error(ErrorCode::ParseError, fmt::format("row {}, column lat", row));
    auto lon = parse_degrees(fields[lon_col]);
    if (!lon) throw Error(ErrorCode::ParseError, fmt::format("row {}, column lon", row));
    point.position = {*lat, *lon};
    for (std::size_t e = 0; e < extra_cols.size(); ++e) {
      point.extras.emplace(extra_names[e], std::move(fields[extra_cols[e]]));
    }

    const std::string& id = fields[id_col];
    if (id.empty()) throw Error(ErrorCode::ParseError, fmt::format("row {}, column traj_id is empty", row));
    auto [it, fresh] = grouped.try_emplace(id);
    RawTrajectory& raw = it->second;
    if (fresh) {
      raw.traj.id = id;
      raw.first_row = row;
      if (label_col) raw.traj.label = fields[*label_col];
    } else if (label_col && *raw.traj.label != fields[*label_col]) {
      throw Error(ErrorCode::InconsistentLabel,
                  fmt::format("trajectory '{}' has labels '{}' and '{}'", id, *raw.traj.label,
                              fields[*label_col]));
    }
    raw.traj.points.push_back(std::move(point));
  }
  if (in.bad()) throw Error(ErrorCode::IoError, "read failed");

  TrajectoryDataset ds(label_column);
  ds.set_extra_columns(std::move(extra_names));
  for (auto& [id, raw] : grouped) ds.insert(std::move(raw.traj));
  return validate_dataset(std::move(ds));
}

TrajectoryDataset load_csv(const std::filesystem::path& path,
                           const std::optional<std::string>& label_column) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, fmt::format("cannot open '{}'", path.string()));
  return read_trajectories_csv(in, label_column);
}

std::vector<std::string> output_order(const TrajectoryDataset& ds) {
  std::vector<std::pair<OutputKey, const std::string*>> keyed;
  keyed.reserve(ds.size());
  for (const auto& [id, traj] : ds) keyed.emplace_back(OutputKey(id), &id);
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::string> ids;
  ids.reserve(keyed.size());
  for (const auto& [key, id] : keyed) ids.push_back(*id);
  return ids;
}

void write_trajectories_csv(const TrajectoryDataset& ds, std::ostream& out) {
  const auto& label = ds.label_column();
  std::string line = "traj_id,DateTime,lat,lon";
  if (label) line += "," + escape_csv_field(*label);
  for (const auto& extra : ds.extra_columns()) line += "," + escape_csv_field(extra);
  out << line << '\n';

  fmt::memory_buffer buf;
  for (const auto& id : output_order(ds)) {
    const Trajectory& traj = ds.at(id);
    const std::string escaped_id = escape_csv_field(id);
    const std::string escaped_label = traj.label ? escape_csv_field(*traj.label) : std::string();
    for (const auto& p : traj.points) {
      buf.clear();
      fmt::format_to(std::back_inserter(buf), "{},{},{:.9f},{:.9f}", escaped_id, p.time.to_string(),
                     p.position.lat, p.position.lon);
      if (label) fmt::format_to(std::back_inserter(buf), ",{}", escaped_label);
      for (const auto& extra : ds.extra_columns()) {
        auto it = p.extras.find(extra);
        fmt::format_to(std::back_inserter(buf), ",{}",
                       it == p.extras.end() ? std::string() : escape_csv_field(it->second));
      }
      buf.push_back('\n');
      out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    }
  }
}

void write_csv(const TrajectoryDataset& ds, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, fmt::format("cannot write '{}'", path.string()));
  write_trajectories_csv(ds, out);
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, fmt::format("write to '{}' failed", path.string()));
}

void write_features_csv(std::span<const SegmentFeatureRow> rows, bool with_label, std::ostream& out) {
  out << "traj_id";
  if (with_label) out << ",label";
  for (const auto& column : feature_columns()) out << ',' << column;
  out << '\n';
  for (const auto& row : rows) {
    out << escape_csv_field(row.traj_id);
    if (with_label) out << ',' << escape_csv_field(row.label.value_or(""));
    for (double v : row.values) fmt::print(out, ",{}", v);
    out << '\n';
  }
}

void write_candidates(const CandidateSet& candidates, std::ostream& out) {
  for (const auto& id : candidates.traj_ids) out << id << '\n';
}

std::vector<std::string> read_candidates(std::istream& in) {
  std::vector<std::string> ids;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) ids.push_back(line);
  }
  return ids;
}

}  // namespace trajaug
