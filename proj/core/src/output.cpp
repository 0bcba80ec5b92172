#include "cmred/output.hpp"

#include <sstream>

#include <json.hpp>

#include "cmred/version.hpp"

namespace cmred {

OutputFormat parse_format(std::string_view text) {
  if (text == "md") return OutputFormat::Markdown;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw invalid_input("unknown output format \"" + std::string(text) +
                      "\" (expected md, csv or json)");
}

namespace {

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += "\"\"";
    else quoted.push_back(c);
  }
  quoted += "\"";
  return quoted;
}

void append_meta_markdown(std::string& out, const DocumentMeta& meta) {
  out += "# " + std::string(k_tool_name) + " " + meta.command + "\n\n";
  out += "- tool: " + std::string(k_tool_name) + " " +
         std::string(k_tool_version) + "\n";
  if (!meta.group.empty()) out += "- group: " + meta.group + "\n";
  if (!meta.orientation.empty())
    out += "- orientation: " + meta.orientation + "\n";
  for (const auto& [key, value] : meta.flags)
    out += "- " + key + ": " + value + "\n";
  out += "\n";
}

void append_meta_csv(std::string& out, const DocumentMeta& meta) {
  out += "# tool: " + std::string(k_tool_name) + " " +
         std::string(k_tool_version) + "\n";
  out += "# command: " + meta.command + "\n";
  if (!meta.group.empty()) out += "# group: " + meta.group + "\n";
  if (!meta.orientation.empty())
    out += "# orientation: " + meta.orientation + "\n";
  for (const auto& [key, value] : meta.flags)
    out += "# " + key + ": " + value + "\n";
}

nlohmann::json meta_json(const DocumentMeta& meta) {
  nlohmann::json flags = nlohmann::json::object();
  for (const auto& [key, value] : meta.flags) flags[key] = value;
  nlohmann::json out = {
      {"tool", k_tool_name},
      {"version", k_tool_version},
      {"command", meta.command},
      {"flags", flags},
  };
  if (!meta.group.empty()) out["group"] = meta.group;
  if (!meta.orientation.empty()) out["orientation"] = meta.orientation;
  return out;
}

std::string joined_words(const WordMultiset& words, const char* separator) {
  std::string out;
  bool first = true;
  for (const std::string& text : words.expanded_texts()) {
    if (!first) out += separator;
    out += text;
    first = false;
  }
  return out;
}

nlohmann::json record_json(const CorrespondenceRecord& record) {
  nlohmann::json pieces = nlohmann::json::array();
  for (const NamedPiece& piece : record.pieces) {
    nlohmann::json words = nlohmann::json::array();
    for (const CircularWord& w : piece.piece.words) words.push_back(w.bracketed());
    pieces.push_back({
        {"name", piece.name.base_text()},
        {"multiplicity", piece.multiplicity},
        {"words", words},
    });
  }
  nlohmann::json profile = nlohmann::json::array();
  for (const DecompositionSignature::Part& part : record.signature.profile)
    profile.push_back({{"size", part.size},
                       {"kind", part.self_conjugate ? "self-conjugate"
                                                    : "conjugate-pair"}});
  nlohmann::json out = {
      {"alpha", record.signature.alpha},
      {"beta", record.signature.beta},
      {"signature", record.signature.label()},
      {"profile", profile},
      {"words", record.words.expanded_texts()},
      {"pieces", pieces},
      {"f", record.p_rank},
      {"a", record.a_number},
  };
  if (record.provenance) {
    out["provenance"] = {
        {"iota", record.provenance->iota},
        {"delta", record.provenance->delta_generators},
        {"cm_type", record.provenance->cm_type},
        {"sigma", record.provenance->sigma},
    };
  }
  return out;
}

}  // namespace

std::string render_records(const DocumentMeta& meta,
                           const std::vector<CorrespondenceRecord>& records,
                           OutputFormat format) {
  switch (format) {
    case OutputFormat::Markdown: {
      std::string out;
      append_meta_markdown(out, meta);
      out += "| ideal decomposition | group scheme decomposition | p-rank | "
             "a-number |\n";
      out += "|---|---|---|---|\n";
      for (const CorrespondenceRecord& record : records) {
        out += "| " + record.signature.label() + " | " +
               render_scheme_decomposition(record.pieces) + " | " +
               std::to_string(record.p_rank) + " | " +
               std::to_string(record.a_number) + " |\n";
      }
      return out;
    }
    case OutputFormat::Csv: {
      std::string out;
      append_meta_csv(out, meta);
      out += "alpha,beta,signature,words,pieces,f,a\n";
      for (const CorrespondenceRecord& record : records) {
        out += std::to_string(record.signature.alpha) + "," +
               std::to_string(record.signature.beta) + "," +
               csv_field(record.signature.label()) + "," +
               csv_field(joined_words(record.words, " ")) + "," +
               csv_field(render_scheme_decomposition(record.pieces)) + "," +
               std::to_string(record.p_rank) + "," +
               std::to_string(record.a_number) + "\n";
      }
      return out;
    }
    case OutputFormat::Json: {
      nlohmann::json doc = {
          {"meta", meta_json(meta)},
          {"records", nlohmann::json::array()},
      };
      for (const CorrespondenceRecord& record : records)
        doc["records"].push_back(record_json(record));
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

std::string render_classification(const DocumentMeta& meta, std::uint32_t g,
                                  const std::vector<ClassificationEntry>& entries,
                                  OutputFormat format) {
  auto words_text = [](const ClassificationEntry& entry) {
    std::string out;
    for (std::size_t i = 0; i < entry.piece.words.size(); ++i) {
      if (i > 0) out += ", ";
      out += entry.piece.words[i].bracketed();
    }
    return out;
  };
  switch (format) {
    case OutputFormat::Markdown: {
      std::string out;
      append_meta_markdown(out, meta);
      out += "| circular words | group scheme | a-number |\n";
      out += "|---|---|---|\n";
      for (const ClassificationEntry& entry : entries)
        out += "| " + words_text(entry) + " | " + entry.name.base_text() +
               " | " + std::to_string(entry.a_number) + " |\n";
      return out;
    }
    case OutputFormat::Csv: {
      std::string out;
      append_meta_csv(out, meta);
      out += "words,name,a\n";
      for (const ClassificationEntry& entry : entries) {
        std::string words;
        for (std::size_t i = 0; i < entry.piece.words.size(); ++i) {
          if (i > 0) words += " ";
          words += entry.piece.words[i].bracketed();
        }
        out += csv_field(words) + "," + csv_field(entry.name.base_text()) +
               "," + std::to_string(entry.a_number) + "\n";
      }
      return out;
    }
    case OutputFormat::Json: {
      nlohmann::json doc = {
          {"meta", meta_json(meta)},
          {"g", g},
          {"entries", nlohmann::json::array()},
      };
      for (const ClassificationEntry& entry : entries) {
        nlohmann::json words = nlohmann::json::array();
        for (const CircularWord& w : entry.piece.words)
          words.push_back(w.bracketed());
        doc["entries"].push_back({
            {"words", words},
            {"name", entry.name.base_text()},
            {"a", entry.a_number},
        });
      }
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

std::string render_aggregate(const DocumentMeta& meta,
                             const std::set<InvariantPair>& pairs,
                             bool reference_check_passed, OutputFormat format) {
  const char* verdict = reference_check_passed ? "PASS" : "FAIL";
  switch (format) {
    case OutputFormat::Markdown: {
      std::string out;
      append_meta_markdown(out, meta);
      out += "| p-rank | a-number | alpha | beta |\n";
      out += "|---|---|---|---|\n";
      for (const InvariantPair& pair : pairs)
        out += "| " + std::to_string(pair.p_rank) + " | " +
               std::to_string(pair.a_number) + " | " +
               std::to_string(pair.alpha) + " | " + std::to_string(pair.beta) +
               " |\n";
      out += "\nreference table check: " + std::string(verdict) + "\n";
      return out;
    }
    case OutputFormat::Csv: {
      std::string out;
      append_meta_csv(out, meta);
      out += "f,a,alpha,beta\n";
      for (const InvariantPair& pair : pairs)
        out += std::to_string(pair.p_rank) + "," +
               std::to_string(pair.a_number) + "," +
               std::to_string(pair.alpha) + "," + std::to_string(pair.beta) +
               "\n";
      out += "# reference table check: " + std::string(verdict) + "\n";
      return out;
    }
    case OutputFormat::Json: {
      nlohmann::json doc = {
          {"meta", meta_json(meta)},
          {"pairs", nlohmann::json::array()},
          {"reference_table_check", verdict},
      };
      for (const InvariantPair& pair : pairs)
        doc["pairs"].push_back({{"f", pair.p_rank},
                                {"a", pair.a_number},
                                {"alpha", pair.alpha},
                                {"beta", pair.beta}});
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

std::string render_group_catalog(const DocumentMeta& meta,
                                 const std::vector<CatalogEntry>& entries,
                                 OutputFormat format) {
  switch (format) {
    case OutputFormat::Markdown: {
      std::string out;
      append_meta_markdown(out, meta);
      out += "| spec | order | degree | notes |\n";
      out += "|---|---|---|---|\n";
      for (const CatalogEntry& entry : entries)
        out += "| " + entry.spec + " | " + entry.order + " | " + entry.degree +
               " | " + entry.note + " |\n";
      return out;
    }
    case OutputFormat::Csv: {
      std::string out;
      append_meta_csv(out, meta);
      out += "spec,order,degree,notes\n";
      for (const CatalogEntry& entry : entries)
        out += csv_field(entry.spec) + "," + csv_field(entry.order) + "," +
               csv_field(entry.degree) + "," + csv_field(entry.note) + "\n";
      return out;
    }
    case OutputFormat::Json: {
      nlohmann::json doc = {
          {"meta", meta_json(meta)},
          {"groups", nlohmann::json::array()},
      };
      for (const CatalogEntry& entry : entries)
        doc["groups"].push_back({{"spec", entry.spec},
                                 {"order", entry.order},
                                 {"degree", entry.degree},
                                 {"notes", entry.note}});
      return doc.dump(2) + "\n";
    }
  }
  return {};
}

std::vector<ParsedRecord> parse_records_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw invalid_input(std::string("document is not valid JSON: ") + e.what());
  }
  if (!doc.contains("records") || !doc["records"].is_array())
    throw invalid_input("JSON document has no \"records\" array");
  std::vector<ParsedRecord> out;
  for (const auto& item : doc["records"]) {
    ParsedRecord record;
    record.alpha = item.at("alpha").get<std::uint32_t>();
    record.beta = item.at("beta").get<std::uint32_t>();
    record.signature = item.at("signature").get<std::string>();
    for (const auto& w : item.at("words"))
      record.words.push_back(w.get<std::string>());
    for (const auto& piece : item.at("pieces")) {
      std::string rendered = piece.at("name").get<std::string>();
      const auto mult = piece.at("multiplicity").get<std::uint32_t>();
      if (mult > 1) rendered += "^" + std::to_string(mult);
      record.pieces.push_back(std::move(rendered));
    }
    record.p_rank = item.at("f").get<std::uint32_t>();
    record.a_number = item.at("a").get<std::uint32_t>();
    out.push_back(std::move(record));
  }
  return out;
}

}  // namespace cmred
