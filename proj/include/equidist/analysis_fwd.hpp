#pragma once

namespace equidist::analysis {
class PeriodicBVFunction;
}
