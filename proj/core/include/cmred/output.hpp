#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cmred/catalog.hpp"
#include "cmred/pipeline.hpp"

namespace cmred {

enum class OutputFormat { Markdown, Csv, Json };

/// Accepts "md", "csv", "json"; rejects anything else.
OutputFormat parse_format(std::string_view text);

/// Run metadata echoed into every document. Flags keep insertion order.
struct DocumentMeta {
  std::string command;
  std::string group;
  std::string orientation;
  std::vector<std::pair<std::string, std::string>> flags;
};

std::string render_records(const DocumentMeta& meta,
                           const std::vector<CorrespondenceRecord>& records,
                           OutputFormat format);

std::string render_classification(const DocumentMeta& meta, std::uint32_t g,
                                  const std::vector<ClassificationEntry>& entries,
                                  OutputFormat format);

std::string render_aggregate(const DocumentMeta& meta,
                             const std::set<InvariantPair>& pairs,
                             bool reference_check_passed, OutputFormat format);

std::string render_group_catalog(const DocumentMeta& meta,
                                 const std::vector<CatalogEntry>& entries,
                                 OutputFormat format);

/// Records as read back from a JSON document; the machine-readable anchor the
/// other formats are checked against.
struct ParsedRecord {
  std::uint32_t alpha = 0;
  std::uint32_t beta = 0;
  std::string signature;
  std::vector<std::string> words;
  std::vector<std::string> pieces;  // rendered name with multiplicity
  std::uint32_t p_rank = 0;
  std::uint32_t a_number = 0;
};

std::vector<ParsedRecord> parse_records_json(const std::string& text);

}  // namespace cmred
