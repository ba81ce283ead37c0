#include "rxnkit/metrics/ocr.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "rxnkit/core/errors.hpp"
#include "rxnkit/core/utf8.hpp"

namespace rxnkit::metrics {

namespace {

bool is_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' || c == U'\v' ||
         c == 0x00A0 || c == 0x3000;
}

std::u32string stripped(std::string_view text) {
  std::u32string s = decode_utf8(text);
  auto first = std::find_if_not(s.begin(), s.end(), is_space);
  auto last = std::find_if_not(s.rbegin(), s.rend(), is_space).base();
  return first < last ? std::u32string(first, last) : std::u32string();
}

}  // namespace

std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

double ocr_accuracy(std::string_view pred_text, std::string_view gt_text) {
  std::u32string gt = stripped(gt_text);
  if (gt.empty()) throw Error(ErrorCode::InvalidArgument, "ground-truth text is empty");
  std::u32string pred = stripped(pred_text);
  double d = static_cast<double>(levenshtein(pred, gt));
  return std::max(0.0, 1.0 - d / static_cast<double>(gt.size()));
}

std::size_t ocr_length(std::string_view text) { return stripped(text).size(); }

}  // namespace rxnkit::metrics
