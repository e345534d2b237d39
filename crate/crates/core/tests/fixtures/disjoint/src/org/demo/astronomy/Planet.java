package org.demo.astronomy;

public class Planet {
    private Orbit orbit;
    private Star star;
    private Moon moon;

    public Planet(Orbit orbit, Star star, Moon moon) {
        this.orbit = orbit;
        this.star = star;
        this.moon = moon;
    }

    public int axialTilt() {
        return 23;
    }

    public int craterDensity() {
        return 4;
    }

    public Orbit orbit() {
        return orbit;
    }
}
