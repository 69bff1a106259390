#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace lielab {

// Files under data/catalog, compiled into the library.
struct EmbeddedFile {
  std::string_view name;
  std::string_view content;
};

std::span<const EmbeddedFile> embedded_catalog_files();

inline std::optional<std::string_view> embedded_catalog_file(std::string_view name) {
  for (const auto& f : embedded_catalog_files())
    if (f.name == name) return f.content;
  return std::nullopt;
}

}  // namespace lielab
