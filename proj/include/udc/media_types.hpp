#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <string_view>

namespace udc {

// Static snapshot of commonly catalogued formats: registered media types plus
// the bare file-extension tokens portals use. Checked case-insensitively.
namespace detail {

inline constexpr std::array<std::string_view, 44> kMediaTypeSnapshot = {
    "application/geo+json",
    "application/gzip",
    "application/json",
    "application/ld+json",
    "application/msword",
    "application/n-triples",
    "application/octet-stream",
    "application/pdf",
    "application/rdf+xml",
    "application/sparql-update",
    "application/sql",
    "application/vnd.ace+json",
    "application/vnd.apache.parquet",
    "application/vnd.google-earth.kml+xml",
    "application/vnd.google-earth.kmz",
    "application/vnd.ms-excel",
    "application/vnd.oasis.opendocument.spreadsheet",
    "application/vnd.openxmlformats-officedocument.spreadsheetml.sheet",
    "application/vnd.openxmlformats-officedocument.wordprocessingml.document",
    "application/x-7z-compressed",
    "application/x-bzip2",
    "application/x-hdf5",
    "application/x-netcdf",
    "application/x-tar",
    "application/xml",
    "application/zip",
    "image/geotiff",
    "image/jpeg",
    "image/png",
    "image/tiff",
    "text/csv",
    "text/csv-schema",
    "text/csvm+json",
    "text/html",
    "text/markdown",
    "text/n3",
    "text/plain",
    "text/tab-separated-values",
    "text/turtle",
    "text/xml",
    "video/mp4",
    "application/vnd.sqlite3",
    "application/wkt",
    "application/gml+xml",
};

inline constexpr std::array<std::string_view, 42> kExtensionSnapshot = {
    "csv",  "tsv",  "txt",   "json",    "geojson", "xml",  "rdf",  "ttl",
    "nt",   "n3",   "jsonld", "xls",    "xlsx",    "xlsm", "ods",  "pdf",
    "doc",  "docx", "html",  "htm",     "md",      "kml",  "kmz",  "shp",
    "gml",  "gpkg", "tif",   "tiff",    "geotiff", "png",  "jpg",  "jpeg",
    "zip",  "gz",   "7z",    "tar",     "parquet", "sql",  "db",   "nc",
    "hdf5", "wkt",
};

inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace detail

/// True when the token is in the shipped media-type/extension snapshot.
inline bool known_format_token(std::string_view token) {
  const std::string t = detail::ascii_lower(token);
  const auto& types = detail::kMediaTypeSnapshot;
  const auto& exts = detail::kExtensionSnapshot;
  return std::find(types.begin(), types.end(), t) != types.end() ||
         std::find(exts.begin(), exts.end(), t) != exts.end();
}

}  // namespace udc
