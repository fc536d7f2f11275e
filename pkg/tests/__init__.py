# Tests package for gorext
