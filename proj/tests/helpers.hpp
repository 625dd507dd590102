// Shared fixtures for the unit tests.
#pragma once

#include <memory>

#include "extwb/charmod.hpp"
#include "extwb/grp.hpp"
#include "extwb/tower.hpp"

namespace testing {

struct Setup {
  std::unique_ptr<extwb::tower::Tower> tw;
  extwb::coeff::FieldPtr field;
  std::unique_ptr<extwb::grp::Group> G;

  Setup(std::uint64_t q, unsigned imax)
      : tw(std::make_unique<extwb::tower::Tower>(extwb::tower::TowerConfig::from_q(q, imax))),
        field(extwb::coeff::Field::make(extwb::charmod::default_mode(*tw))),
        G(std::make_unique<extwb::grp::Group>(*tw)) {}
  Setup(std::uint64_t q, unsigned imax, const extwb::coeff::CoeffMode& mode)
      : tw(std::make_unique<extwb::tower::Tower>(extwb::tower::TowerConfig::from_q(q, imax))),
        field(extwb::coeff::Field::make(mode)),
        G(std::make_unique<extwb::grp::Group>(*tw)) {}

  extwb::charmod::TorusChar chr(long long e) const { return {*tw, field, e}; }
};

}  // namespace testing
