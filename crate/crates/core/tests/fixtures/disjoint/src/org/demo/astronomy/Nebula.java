package org.demo.astronomy;

public class Nebula {
    private Galaxy galaxy;
    private Star star;

    public Nebula(Galaxy galaxy, Star star) {
        this.galaxy = galaxy;
        this.star = star;
    }

    public int dustOpacity() {
        return 2;
    }

    public int ionizedHydrogen() {
        return 5;
    }

    public Galaxy galaxy() {
        return galaxy;
    }
}
