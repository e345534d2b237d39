package org.demo.astronomy;

public class Star {
    private Planet planet;
    private Galaxy galaxy;
    private Orbit orbit;

    public Star(Planet planet, Galaxy galaxy, Orbit orbit) {
        this.planet = planet;
        this.galaxy = galaxy;
        this.orbit = orbit;
    }

    public int stellarMagnitude() {
        return 6;
    }

    public int photonFlux() {
        return 9;
    }

    public Planet planet() {
        return planet;
    }
}
