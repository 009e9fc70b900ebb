"""Published modular equations L_n(X, Y) for l, as polynomial text."""

KNOWN_MODEQ = {
    2: (
        "1 + X - 2*X*Y - X*Y^2 + X^2*Y^2"
    ),
    4: (
        "- X - X^2 + X^3 + X^4 + 4*X*Y + 4*X^2*Y - 8*X^3*Y + 2*X*Y^2 + 8*X^2*Y^2 - 2*X^3*Y^2 "
        "- 8*X*Y^3 - 4*X^2*Y^3 + 4*X^3*Y^3 + Y^4 - X*Y^4 - X^2*Y^4 + X^3*Y^4"
    ),
    5: (
        "(X^5 - Y)*(Y^2 - Y - 1)^2 + 5*X*Y*(1 - 3*X^2 + Y + 3*X*Y + 2*X^2*Y - X^3*Y - Y^2 - "
        "2*X*Y^2 + 3*X^2*Y^2 - X^3*Y^2 - 3*X*Y^3 + X^3*Y^3)"
    ),
    6: (
        "- X - 2*X^2 + 2*X^4 + X^5 + 6*X*Y - 12*X^3*Y + 8*X^4*Y - 2*X^5*Y - 3*X*Y^2 + "
        "33*X^2*Y^2 + 27*X^3*Y^2 - 53*X^4*Y^2 - 13*X^5*Y^2 + 3*X^6*Y^2 + 5*X^7*Y^2 + X^8*Y^2 "
        "- 22*X*Y^3 + 24*X^2*Y^3 + 96*X^3*Y^3 - 40*X^4*Y^3 - 78*X^5*Y^3 + 24*X^6*Y^3 + "
        "12*X^7*Y^3 + 9*X*Y^4 - 30*X^2*Y^4 - 39*X^3*Y^4 + 92*X^4*Y^4 + 39*X^5*Y^4 - "
        "30*X^6*Y^4 - 9*X^7*Y^4 + 12*X*Y^5 - 24*X^2*Y^5 - 78*X^3*Y^5 + 40*X^4*Y^5 + "
        "96*X^5*Y^5 - 24*X^6*Y^5 - 22*X^7*Y^5 + Y^6 - 5*X*Y^6 + 3*X^2*Y^6 + 13*X^3*Y^6 - "
        "53*X^4*Y^6 - 27*X^5*Y^6 + 33*X^6*Y^6 + 3*X^7*Y^6 - 2*X^3*Y^7 - 8*X^4*Y^7 - "
        "12*X^5*Y^7 + 6*X^7*Y^7 - X^3*Y^8 + 2*X^4*Y^8 - 2*X^6*Y^8 + X^7*Y^8"
    ),
    13: (
        "(X^13 - Y)*(X*Y^13 + 1) + 13*X*Y*(1 - 4*X + X^2 + 26*X^3 - 33*X^4 - 57*X^5 + 88*X^6 "
        "+ 53*X^7 - 77*X^8 - 18*X^9 + 21*X^10 + X^11 - X^12 + Y + 6*X*Y - 88*X^2*Y + 76*X^3*Y "
        "+ 580*X^4*Y - 214*X^5*Y - 990*X^6*Y + 226*X^7*Y + 608*X^8*Y - 100*X^9*Y - 110*X^10*Y "
        "+ 6*X^11*Y + 4*X^12*Y - 21*Y^2 + 110*X*Y^2 + 178*X^2*Y^2 - 1147*X^3*Y^2 - "
        "629*X^4*Y^2 + 3003*X^5*Y^2 + 396*X^6*Y^2 - 2915*X^7*Y^2 + 255*X^8*Y^2 + 1053*X^9*Y^2 "
        "- 178*X^10*Y^2 - 88*X^11*Y^2 - X^12*Y^2 - 18*Y^3 - 100*X*Y^3 + 1053*X^2*Y^3 + "
        "114*X^3*Y^3 - 6447*X^4*Y^3 - 586*X^5*Y^3 + 11132*X^6*Y^3 + 382*X^7*Y^3 - "
        "6808*X^8*Y^3 + 114*X^9*Y^3 + 1147*X^10*Y^3 + 76*X^11*Y^3 - 26*X^12*Y^3 + 77*Y^4 - "
        "608*X*Y^4 - 255*X^2*Y^4 + 6808*X^3*Y^4 + 1291*X^4*Y^4 - 18366*X^5*Y^4 - 484*X^6*Y^4 "
        "+ 18077*X^7*Y^4 - 1291*X^8*Y^4 - 6447*X^9*Y^4 + 629*X^10*Y^4 + 580*X^11*Y^4 + "
        "33*X^12*Y^4 + 53*Y^5 + 226*X*Y^5 - 2915*X^2*Y^5 + 382*X^3*Y^5 + 18077*X^4*Y^5 + "
        "96*X^5*Y^5 - 30602*X^6*Y^5 + 96*X^7*Y^5 + 18366*X^8*Y^5 - 586*X^9*Y^5 - "
        "3003*X^10*Y^5 - 214*X^11*Y^5 + 57*X^12*Y^5 - 88*Y^6 + 990*X*Y^6 - 396*X^2*Y^6 - "
        "11132*X^3*Y^6 + 484*X^4*Y^6 + 30602*X^5*Y^6 - 30602*X^7*Y^6 + 484*X^8*Y^6 + "
        "11132*X^9*Y^6 - 396*X^10*Y^6 - 990*X^11*Y^6 - 88*X^12*Y^6 - 57*Y^7 - 214*X*Y^7 + "
        "3003*X^2*Y^7 - 586*X^3*Y^7 - 18366*X^4*Y^7 + 96*X^5*Y^7 + 30602*X^6*Y^7 + 96*X^7*Y^7 "
        "- 18077*X^8*Y^7 + 382*X^9*Y^7 + 2915*X^10*Y^7 + 226*X^11*Y^7 - 53*X^12*Y^7 + 33*Y^8 "
        "- 580*X*Y^8 + 629*X^2*Y^8 + 6447*X^3*Y^8 - 1291*X^4*Y^8 - 18077*X^5*Y^8 - "
        "484*X^6*Y^8 + 18366*X^7*Y^8 + 1291*X^8*Y^8 - 6808*X^9*Y^8 - 255*X^10*Y^8 + "
        "608*X^11*Y^8 + 77*X^12*Y^8 + 26*Y^9 + 76*X*Y^9 - 1147*X^2*Y^9 + 114*X^3*Y^9 + "
        "6808*X^4*Y^9 + 382*X^5*Y^9 - 11132*X^6*Y^9 - 586*X^7*Y^9 + 6447*X^8*Y^9 + "
        "114*X^9*Y^9 - 1053*X^10*Y^9 - 100*X^11*Y^9 + 18*X^12*Y^9 - Y^10 + 88*X*Y^10 - "
        "178*X^2*Y^10 - 1053*X^3*Y^10 + 255*X^4*Y^10 + 2915*X^5*Y^10 + 396*X^6*Y^10 - "
        "3003*X^7*Y^10 - 629*X^8*Y^10 + 1147*X^9*Y^10 + 178*X^10*Y^10 - 110*X^11*Y^10 - "
        "21*X^12*Y^10 - 4*Y^11 + 6*X*Y^11 + 110*X^2*Y^11 - 100*X^3*Y^11 - 608*X^4*Y^11 + "
        "226*X^5*Y^11 + 990*X^6*Y^11 - 214*X^7*Y^11 - 580*X^8*Y^11 + 76*X^9*Y^11 + "
        "88*X^10*Y^11 + 6*X^11*Y^11 - X^12*Y^11 - Y^12 - X*Y^12 + 21*X^2*Y^12 + 18*X^3*Y^12 - "
        "77*X^4*Y^12 - 53*X^5*Y^12 + 88*X^6*Y^12 + 57*X^7*Y^12 - 33*X^8*Y^12 - 26*X^9*Y^12 + "
        "X^10*Y^12 + 4*X^11*Y^12 + X^12*Y^12)"
    ),
}
