#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace actkit {

struct TradeRecord {
  std::int64_t time = 0;  // epoch seconds, exchange-local taken verbatim
  std::string symbol;
  double price = 0.0;
  std::int64_t shares = 0;
};

enum class SessionPolicy {
  reject_file,  // out-of-session timestamp aborts the parse
  drop_row,     // out-of-session rows dropped and counted
};

struct TradeParseOptions {
  char delimiter = ',';
  SessionPolicy session_policy = SessionPolicy::drop_row;
};

struct TradeParseStats {
  std::size_t rows = 0;  // data rows seen (header excluded)
  std::size_t parsed = 0;
  std::size_t malformed = 0;       // bad fields or invariant violations, dropped
  std::size_t out_of_session = 0;  // dropped under SessionPolicy::drop_row

  TradeParseStats& operator+=(const TradeParseStats& o) {
    rows += o.rows;
    parsed += o.parsed;
    malformed += o.malformed;
    out_of_session += o.out_of_session;
    return *this;
  }
};

// Parses one delimited trade file, plain text or gzip (detected from content).
// Columns: ISO-8601 timestamp, symbol, decimal price, integer shares. An
// optional header row is recognized on the first line. Appends to `out`.
//
// A row with the wrong field count is a schema mismatch and aborts with
// parse_error naming the line; a row whose fields fail to parse or violate
// price > 0 / shares > 0 is counted as malformed and dropped.
TradeParseStats parse_trades(const std::string& path, const TradeParseOptions& opt,
                             std::vector<TradeRecord>& out);

// Same grammar, parsing an in-memory buffer. `name` labels error messages.
TradeParseStats parse_trades_text(std::string_view text, const TradeParseOptions& opt,
                                  std::vector<TradeRecord>& out,
                                  const std::string& name = "<memory>");

}  // namespace actkit
