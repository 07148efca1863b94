#pragma once

#include "evenzeta/bernoulli.hpp"
#include "evenzeta/closed_form.hpp"
#include "evenzeta/oracle.hpp"
#include "evenzeta/pi_value.hpp"
#include "evenzeta/rational.hpp"
#include "evenzeta/record.hpp"
#include "evenzeta/report.hpp"
#include "evenzeta/series.hpp"
#include "evenzeta/symfunc.hpp"
