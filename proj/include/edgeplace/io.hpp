#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace edgeplace {

// Shortest decimal text that parses back to the identical double.
std::string FormatDouble(double value);

std::optional<double> ParseDouble(std::string_view text);
std::optional<std::int64_t> ParseInt(std::string_view text);

// Splits one CSV line on commas. Fields are trimmed of surrounding
// whitespace; quoting is not supported.
std::vector<std::string_view> SplitCsvLine(std::string_view line);

// Reads a whole text file. Throws IoError.
std::string ReadTextFile(const std::filesystem::path& path);

// Writes to a sibling temp file and renames it over `path`, so readers never
// observe a truncated file. Throws IoError.
void WriteFileAtomic(const std::filesystem::path& path, std::string_view content);

}  // namespace edgeplace
