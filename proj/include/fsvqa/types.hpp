// Copyright 2026 The fsvqa-tools Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fsvqa {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Split { train, val };
enum class Version { regular, augmented };
enum class Provenance { converted_vqa, converted_caption };
enum class QuestionCategory { yes_no, number, other };

const char* to_string(Split s);
const char* to_string(Version v);
const char* to_string(Provenance p);
const char* to_string(QuestionCategory c);

std::optional<Split> split_from_string(std::string_view s);
std::optional<Version> version_from_string(std::string_view s);
std::optional<Provenance> provenance_from_string(std::string_view s);
std::optional<QuestionCategory> category_from_string(std::string_view s);

// Filesystem/read/write failures. Mapped to exit code 1 by the CLI.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally invalid input content. Mapped to exit code 2 by the CLI.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

// Schema error tied to a position in a source file.
class IngestError : public SchemaError {
 public:
  IngestError(const std::filesystem::path& file, std::size_t byte_offset,
              const std::string& msg)
      : SchemaError(file.string() + " (byte " + std::to_string(byte_offset) +
                    "): " + msg),
        file_(file),
        byte_offset_(byte_offset) {}

  const std::filesystem::path& file() const { return file_; }
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::filesystem::path file_;
  std::size_t byte_offset_;
};

}  // namespace fsvqa
