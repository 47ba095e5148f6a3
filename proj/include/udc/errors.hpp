#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace udc {

enum class ErrorCode {
  UnknownPrefix,
  MalformedCurie,
  LevelOutOfRange,
  ConfigMissingKey,
  UnknownCkanField,
  DuplicateFieldKey,
  MalformedDocument,
  MissingId,
  MissingName,
  TemplateSyntax,
  UnknownHelper,
  MultiValueAmbiguity,
  HelperFailure,
  MalformedIri,
  UnknownFacetField,
  DuplicateId,
  IdMismatch,
  IoFailure,
  UnknownEntry,
  EmptyCorpus,
  EndpointError,
  Usage,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownPrefix: return "UnknownPrefix";
    case ErrorCode::MalformedCurie: return "MalformedCurie";
    case ErrorCode::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::ConfigMissingKey: return "ConfigMissingKey";
    case ErrorCode::UnknownCkanField: return "UnknownCkanField";
    case ErrorCode::DuplicateFieldKey: return "DuplicateFieldKey";
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::MissingId: return "MissingId";
    case ErrorCode::MissingName: return "MissingName";
    case ErrorCode::TemplateSyntax: return "TemplateSyntax";
    case ErrorCode::UnknownHelper: return "UnknownHelper";
    case ErrorCode::MultiValueAmbiguity: return "MultiValueAmbiguity";
    case ErrorCode::HelperFailure: return "HelperFailure";
    case ErrorCode::MalformedIri: return "MalformedIri";
    case ErrorCode::UnknownFacetField: return "UnknownFacetField";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::IdMismatch: return "IdMismatch";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::UnknownEntry: return "UnknownEntry";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::EndpointError: return "EndpointError";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace udc
