#ifndef NFV_TABLE_HPP
#define NFV_TABLE_HPP

#include <ostream>
#include <string>
#include <vector>

#include "nfvaaler/config.hpp"
#include "nfvaaler/rat.hpp"

namespace nfv {

// Floats at 12 significant digits; exact rationals as "p/q" strings.
std::string fmt_double(double x);
std::string fmt_rat(const Rat& x);

class Table {
  public:
    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void add_row(std::vector<std::string> cells);
    void write(std::ostream& os, OutputFormat format) const;

  private:
    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;

    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace nfv

#endif
