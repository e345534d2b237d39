package org.demo.astronomy;

public class Telescope {
    private Star star;
    private Galaxy galaxy;
    private Nebula nebula;

    public Telescope(Star star, Galaxy galaxy, Nebula nebula) {
        this.star = star;
        this.galaxy = galaxy;
        this.nebula = nebula;
    }

    public int apertureMillimeters() {
        return 200;
    }

    public int focalLength() {
        return 1200;
    }

    public Star star() {
        return star;
    }
}
