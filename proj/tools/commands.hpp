#pragma once

#include <string>

#include "json.hpp"

namespace leibniz::cli {

enum class Format { text, structured };

/// Command output. `ok` decides the exit code (0 or 1).
struct Report {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::string text;  ///< human-readable body, without the status line
  bool ok = true;

  std::string render(Format f) const;
};

Report cmd_catalog_list();
Report cmd_catalog_show(const std::string& ref);
/// The algebra file document, printed as is in either format.
std::string cmd_catalog_export(const std::string& ref);
Report cmd_check(const std::string& ref);
Report cmd_der(const std::string& ref);
Report cmd_degenerate(const std::string& source, const std::string& family, const std::string& target);
Report cmd_obstruct(const std::string& source, const std::string& target);
Report cmd_verify_paper(unsigned threads);

}  // namespace leibniz::cli
