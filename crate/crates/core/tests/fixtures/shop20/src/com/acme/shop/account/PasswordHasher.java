package com.acme.shop.account;

public class PasswordHasher {
    private LoginSession loginSession;

    public PasswordHasher(LoginSession loginSession) {
        this.loginSession = loginSession;
    }

    public int saltRounds() {
        return 12;
    }

    public LoginSession loginSession() {
        return loginSession;
    }
}
