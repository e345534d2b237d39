package org.demo.astronomy;

public class Moon {
    private Planet planet;
    private Orbit orbit;
    private Telescope telescope;

    public Moon(Planet planet, Orbit orbit, Telescope telescope) {
        this.planet = planet;
        this.orbit = orbit;
        this.telescope = telescope;
    }

    public int tidalLock() {
        return 1;
    }

    public int lunarPhase() {
        return 7;
    }

    public Planet planet() {
        return planet;
    }
}
