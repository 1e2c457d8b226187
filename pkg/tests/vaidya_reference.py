"""Expected nonzero components for the radiating metric in the catalog.

Keys are 1-based index strings naming one canonical representative per
symmetry orbit; values are expressions in the metric-file grammar.  Tensors
carry their usual index symmetries, so components absent here are either
zero or related to a listed one by a symmetry of the tensor.

Derivative components put the differentiation index last: "12121" is the
(1,2,1,2) component differentiated along coordinate 1.
"""

RIEMANN = {
    "1212": "-2*m(u)/r^3",
    "1313": "-(2*m(u)^2 + r^2*m'(u) - m(u)*r)/r^2",
    "1323": "m(u)/r",
    "1414": "-(2*m(u)^2 + r^2*m'(u) - m(u)*r)*sin(theta)^2/r^2",
    "1424": "m(u)*sin(theta)^2/r",
    "3434": "2*m(u)*r*sin(theta)^2",
}

RICCI = {
    "11": "2*m'(u)/r^2",
}

KAPPA = "0"

WEYL = {
    "1212": "-2*m(u)/r^3",
    "1313": "-m(u)*(2*m(u) - r)/r^2",
    "1323": "m(u)/r",
    "1414": "-m(u)*(2*m(u) - r)*sin(theta)^2/r^2",
    "1424": "m(u)*sin(theta)^2/r",
    "3434": "2*m(u)*r*sin(theta)^2",
}

NABLA_RIEMANN = {
    "12121": "-2*m'(u)/r^3",
    "12122": "6*m(u)/r^4",
    "12133": "(6*m(u)^2 + r^2*m'(u) - 3*m(u)*r)/r^3",
    "12144": "(6*m(u)^2 + r^2*m'(u) - 3*m(u)*r)*sin(theta)^2/r^3",
    "12233": "-3*m(u)/r^2",
    "13232": "-3*m(u)/r^2",
    "12244": "-3*m(u)*sin(theta)^2/r^2",
    "14242": "-3*m(u)*sin(theta)^2/r^2",
    "13131": "-(r^2*m''(u) - r*m'(u) + 4*m(u)*m'(u))/r^2",
    "13132": "(6*m(u)^2 + 2*r^2*m'(u) - 3*m(u)*r)/r^3",
    "13231": "m'(u)/r",
    "14141": "-(r^2*m''(u) - r*m'(u) + 4*m(u)*m'(u))*sin(theta)^2/r^2",
    "14142": "(6*m(u)^2 + 2*r^2*m'(u) - 3*m(u)*r)*sin(theta)^2/r^3",
    "14241": "m'(u)*sin(theta)^2/r",
    "13344": "-r*m'(u)*sin(theta)^2",
    "14343": "r*m'(u)*sin(theta)^2",
    "34341": "2*r*m'(u)*sin(theta)^2",
    "23344": "3*m(u)*sin(theta)^2",
    "24343": "-3*m(u)*sin(theta)^2",
    "34342": "-6*m(u)*sin(theta)^2",
}

NABLA_RICCI = {
    "111": "2*(r^2*m''(u) + 2*m(u)*m'(u))/r^4",
    "112": "-4*m'(u)/r^3",
    "133": "-2*m'(u)/r",
    "144": "-2*m'(u)*sin(theta)^2/r",
}

NABLA_WEYL = {
    "12121": "-2*m'(u)/r^3",
    "12122": "6*m(u)/r^4",
    "12133": "3*m(u)*(2*m(u) - r)/r^3",
    "13132": "3*m(u)*(2*m(u) - r)/r^3",
    "12144": "3*m(u)*(2*m(u) - r)*sin(theta)^2/r^3",
    "14142": "3*m(u)*(2*m(u) - r)*sin(theta)^2/r^3",
    "12233": "-3*m(u)/r^2",
    "13232": "-3*m(u)/r^2",
    "12244": "-3*m(u)*sin(theta)^2/r^2",
    "14242": "-3*m(u)*sin(theta)^2/r^2",
    "13131": "(r - 2*m(u))*m'(u)/r^2",
    "13231": "m'(u)/r",
    "14141": "(r - 2*m(u))*m'(u)*sin(theta)^2/r^2",
    "14241": "m'(u)*sin(theta)^2/r",
    "23344": "3*m(u)*sin(theta)^2",
    "24343": "-3*m(u)*sin(theta)^2",
    "34342": "-6*m(u)*sin(theta)^2",
    "34341": "2*r*m'(u)*sin(theta)^2",
}

ENERGY_MOMENTUM = {
    "11": "2*c^4*m'(u)/(8*pi*G*r^2)",
}

NABLA_ENERGY_MOMENTUM = {
    "111": "c^4*(r^2*m''(u) + 2*m(u)*m'(u))/(4*pi*G*r^4)",
    "112": "-c^4*m'(u)/(2*pi*G*r^3)",
    "133": "-c^4*m'(u)/(4*pi*G*r)",
    "144": "-c^4*m'(u)*sin(theta)^2/(4*pi*G*r)",
}

RR = {
    "121313": "-2*m(u)*m'(u)/r^3",
    "131312": "4*m(u)*m'(u)/r^3",
    "121323": "3*m(u)^2/r^4",
    "122313": "-3*m(u)^2/r^4",
    "121414": "-2*m(u)*m'(u)*sin(theta)^2/r^3",
    "141412": "4*m(u)*m'(u)*sin(theta)^2/r^3",
    "121424": "3*m(u)^2*sin(theta)^2/r^4",
    "122414": "-3*m(u)^2*sin(theta)^2/r^4",
    "133414": "-m(u)*(6*m(u)^2 + 4*r^2*m'(u) - 3*m(u)*r)*sin(theta)^2/r^3",
    "143413": "m(u)*(6*m(u)^2 + 4*r^2*m'(u) - 3*m(u)*r)*sin(theta)^2/r^3",
    "133424": "3*m(u)^2*sin(theta)^2/r^2",
    "143423": "-3*m(u)^2*sin(theta)^2/r^2",
    "233414": "3*m(u)^2*sin(theta)^2/r^2",
    "243413": "-3*m(u)^2*sin(theta)^2/r^2",
}

RC = {
    "121313": "-3*m(u)*m'(u)/r^3",
    "121323": "3*m(u)^2/r^4",
    "122313": "-3*m(u)^2/r^4",
    "121414": "-3*m(u)*m'(u)*sin(theta)^2/r^3",
    "121424": "3*m(u)^2*sin(theta)^2/r^4",
    "122414": "-3*m(u)^2*sin(theta)^2/r^4",
    "133414": "-3*m(u)*(2*m(u)^2 + r^2*m'(u) - m(u)*r)*sin(theta)^2/r^3",
    "143413": "3*m(u)*(2*m(u)^2 + r^2*m'(u) - m(u)*r)*sin(theta)^2/r^3",
    "133424": "3*m(u)^2*sin(theta)^2/r^2",
    "143423": "-3*m(u)^2*sin(theta)^2/r^2",
    "233414": "3*m(u)^2*sin(theta)^2/r^2",
    "243413": "-3*m(u)^2*sin(theta)^2/r^2",
}

CR = {
    "121313": "m(u)*m'(u)/r^3",
    "131312": "4*m(u)*m'(u)/r^3",
    "121323": "3*m(u)^2/r^4",
    "122313": "-3*m(u)^2/r^4",
    "121414": "m(u)*m'(u)*sin(theta)^2/r^3",
    "141412": "4*m(u)*m'(u)*sin(theta)^2/r^3",
    "121424": "3*m(u)^2*sin(theta)^2/r^4",
    "122414": "-3*m(u)^2*sin(theta)^2/r^4",
    "133414": "-m(u)*(6*m(u)^2 + r^2*m'(u) - 3*m(u)*r)*sin(theta)^2/r^3",
    "143413": "m(u)*(6*m(u)^2 + r^2*m'(u) - 3*m(u)*r)*sin(theta)^2/r^3",
    "133424": "3*m(u)^2*sin(theta)^2/r^2",
    "143423": "-3*m(u)^2*sin(theta)^2/r^2",
    "233414": "3*m(u)^2*sin(theta)^2/r^2",
    "243413": "-3*m(u)^2*sin(theta)^2/r^2",
}

CC = {
    "121323": "3*m(u)^2/r^4",
    "122313": "-3*m(u)^2/r^4",
    "121424": "3*m(u)^2*sin(theta)^2/r^4",
    "122414": "-3*m(u)^2*sin(theta)^2/r^4",
    "133414": "-3*m(u)^2*(2*m(u) - r)*sin(theta)^2/r^3",
    "143413": "3*m(u)^2*(2*m(u) - r)*sin(theta)^2/r^3",
    "133424": "3*m(u)^2*sin(theta)^2/r^2",
    "143423": "-3*m(u)^2*sin(theta)^2/r^2",
    "233414": "3*m(u)^2*sin(theta)^2/r^2",
    "243413": "-3*m(u)^2*sin(theta)^2/r^2",
}

Q_G_R = {
    "121313": "m'(u)",
    "131312": "-2*m'(u)",
    "121323": "3*m(u)/r",
    "122313": "-3*m(u)/r",
    "121414": "m'(u)*sin(theta)^2",
    "141412": "-2*m'(u)*sin(theta)^2",
    "121424": "3*m(u)*sin(theta)^2/r",
    "122414": "-3*m(u)*sin(theta)^2/r",
    "133414": "-(6*m(u)^2 + r^2*m'(u) - 3*m(u)*r)*sin(theta)^2",
    "143413": "(6*m(u)^2 + r^2*m'(u) - 3*m(u)*r)*sin(theta)^2",
    "133424": "3*m(u)*r*sin(theta)^2",
    "143423": "-3*m(u)*r*sin(theta)^2",
    "233414": "3*m(u)*r*sin(theta)^2",
    "243413": "-3*m(u)*r*sin(theta)^2",
}

Q_S_R = {
    "121313": "-2*m(u)*m'(u)/r^3",
    "131312": "4*m(u)*m'(u)/r^3",
    "121414": "-2*m(u)*m'(u)*sin(theta)^2/r^3",
    "141412": "4*m(u)*m'(u)*sin(theta)^2/r^3",
    "133414": "-4*m(u)*m'(u)*sin(theta)^2/r",
    "143413": "4*m(u)*m'(u)*sin(theta)^2/r",
}

Q_G_C = {
    "121323": "3*m(u)/r",
    "122313": "-3*m(u)/r",
    "121424": "3*m(u)*sin(theta)^2/r",
    "122414": "-3*m(u)*sin(theta)^2/r",
    "133414": "-3*m(u)*(2*m(u) - r)*sin(theta)^2",
    "143413": "3*m(u)*(2*m(u) - r)*sin(theta)^2",
    "133424": "3*m(u)*r*sin(theta)^2",
    "143423": "-3*m(u)*r*sin(theta)^2",
    "233414": "3*m(u)*r*sin(theta)^2",
    "243413": "-3*m(u)*r*sin(theta)^2",
}

Q_S_C = dict(Q_S_R)
