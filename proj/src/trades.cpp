#include "actkit/trades.hpp"

#include <zlib.h>

#include <charconv>
#include <cmath>
#include <memory>

#include "actkit/calendar.hpp"
#include "actkit/errors.hpp"

namespace actkit {

namespace {

void split_fields(std::string_view line, char delim, std::vector<std::string_view>& out) {
  out.clear();
  std::size_t pos = 0;
  while (true) {
    std::size_t next = line.find(delim, pos);
    if (next == std::string_view::npos) {
      out.push_back(line.substr(pos));
      return;
    }
    out.push_back(line.substr(pos, next - pos));
    pos = next + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

bool parse_price(std::string_view s, double& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size() && std::isfinite(out);
}

bool parse_shares(std::string_view s, std::int64_t& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

bool in_session(std::int64_t epoch_sec) {
  const std::int64_t sec_of_day = ((epoch_sec % 86400) + 86400) % 86400;
  // Trades printed exactly at the close are kept (assigned to the last bin).
  return sec_of_day >= kSessionOpenSec && sec_of_day <= kSessionCloseSec;
}

class Parser {
public:
  Parser(const TradeParseOptions& opt, std::vector<TradeRecord>& out,
         const std::string& name)
      : opt_(opt), out_(out), name_(name) {}

  void line(std::string_view raw) {
    ++lineno_;
    std::string_view text = raw;
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    if (text.empty()) return;

    split_fields(text, opt_.delimiter, fields_);
    if (fields_.size() != 4)
      throw parse_error(name_ + ":" + std::to_string(lineno_) +
                        ": expected 4 columns (timestamp, symbol, price, shares), got " +
                        std::to_string(fields_.size()));

    TradeRecord rec;
    const bool ok = parse_row(rec);
    if (lineno_ == 1 && !ok && !timestamp_ok_) return;  // header row
    ++stats_.rows;
    if (!ok) {
      ++stats_.malformed;
      return;
    }
    if (!in_session(rec.time)) {
      if (opt_.session_policy == SessionPolicy::reject_file)
        throw parse_error(name_ + ":" + std::to_string(lineno_) +
                          ": timestamp outside the 09:30-16:00 session");
      ++stats_.out_of_session;
      return;
    }
    ++stats_.parsed;
    out_.push_back(std::move(rec));
  }

  TradeParseStats stats() const { return stats_; }

private:
  bool parse_row(TradeRecord& rec) {
    timestamp_ok_ = parse_iso_datetime(trim(fields_[0]), rec.time);
    if (!timestamp_ok_) return false;
    auto sym = trim(fields_[1]);
    if (sym.empty()) return false;
    rec.symbol.assign(sym);
    if (!parse_price(trim(fields_[2]), rec.price) || rec.price <= 0.0) return false;
    if (!parse_shares(trim(fields_[3]), rec.shares) || rec.shares <= 0) return false;
    return true;
  }

  const TradeParseOptions& opt_;
  std::vector<TradeRecord>& out_;
  const std::string& name_;
  std::vector<std::string_view> fields_;
  TradeParseStats stats_;
  std::size_t lineno_ = 0;
  bool timestamp_ok_ = false;
};

}  // namespace

TradeParseStats parse_trades_text(std::string_view text, const TradeParseOptions& opt,
                                  std::vector<TradeRecord>& out,
                                  const std::string& name) {
  Parser parser(opt, out, name);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    parser.line(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return parser.stats();
}

TradeParseStats parse_trades(const std::string& path, const TradeParseOptions& opt,
                             std::vector<TradeRecord>& out) {
  // gzopen reads both gzip and plain files.
  gzFile gz = gzopen(path.c_str(), "rb");
  if (!gz) throw io_error("cannot open trade file: " + path);
  std::unique_ptr<gzFile_s, decltype(&gzclose)> guard(gz, &gzclose);

  Parser parser(opt, out, path);
  std::string pending;
  char buf[1 << 16];
  int n;
  while ((n = gzread(gz, buf, sizeof buf)) > 0) {
    std::string_view chunk(buf, static_cast<std::size_t>(n));
    std::size_t pos = 0;
    while (true) {
      std::size_t nl = chunk.find('\n', pos);
      if (nl == std::string_view::npos) {
        pending.append(chunk.substr(pos));
        break;
      }
      if (pending.empty()) {
        parser.line(chunk.substr(pos, nl - pos));
      } else {
        pending.append(chunk.substr(pos, nl - pos));
        parser.line(pending);
        pending.clear();
      }
      pos = nl + 1;
    }
  }
  if (n < 0) {
    int errnum = 0;
    const char* msg = gzerror(gz, &errnum);
    throw io_error("error reading " + path + ": " + (msg ? msg : "gzread failed"));
  }
  if (!pending.empty()) parser.line(pending);
  return parser.stats();
}

}  // namespace actkit
