#pragma once

namespace twlayout {

__extension__ typedef __int128 Int128;

}  // namespace twlayout
