#pragma once

#include <unistd.h>

#include <filesystem>
#include <string>

#include "stancelab/core/rng.hpp"
#include "stancelab/corpus/types.hpp"

namespace testsupport {

// Unique scratch directory under the system temp root, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    dir_ = std::filesystem::temp_directory_path() /
           ("stancelab_" + tag + "_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++));
    std::filesystem::create_directories(dir_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }
  const std::filesystem::path& path() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

// Small bundle with the given per-class counts over a single market.
inline stancelab::corpus::DatasetBundle make_bundle(long pro, long anti, long neutral,
                                                    stancelab::corpus::Scheme scheme =
                                                        stancelab::corpus::Scheme::three_class) {
  using namespace stancelab::corpus;
  DatasetBundle b;
  b.scheme = scheme;
  b.markets.push_back({"m1", "Will it resolve yes?", Domain::politics});
  long serial = 0;
  auto add = [&](StanceLabel label, long n) {
    for (long i = 0; i < n; ++i) {
      LabeledExample ex;
      ex.comment.comment_id = "x" + std::to_string(serial++);
      ex.comment.market_id = "m1";
      ex.comment.text = std::string("comment number ") + std::to_string(serial);
      ex.label = label;
      b.examples.push_back(ex);
    }
  };
  add(StanceLabel::Pro, pro);
  add(StanceLabel::Anti, anti);
  add(StanceLabel::Neutral, neutral);
  return b;
}

}  // namespace testsupport
