package org.demo.astronomy;

public class Orbit {
    private Star star;
    private Planet planet;

    public Orbit(Star star, Planet planet) {
        this.star = star;
        this.planet = planet;
    }

    public int apoapsisRadius() {
        return 8;
    }

    public int eccentricityRatio() {
        return 1;
    }

    public Star star() {
        return star;
    }
}
